"""Subgroup lattices, Möbius functions and generation counts of finite groups."""

import json

from ._core import AmoebiusError, BudgetExceeded, Group, ParseError

__all__ = ["AmoebiusError", "BudgetExceeded", "Group", "ParseError", "table_rows"]


def table_rows(group, aut="inn", omega2=False, nonzero=False):
    """The class table as a list of dicts keyed by column name."""
    t = json.loads(group.table(aut=aut, format="json", omega2=omega2, nonzero=nonzero))
    return [dict(zip(t["columns"], row)) for row in t["rows"]]
