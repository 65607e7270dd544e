"""Figure rendering for casimircavity CSV outputs (no physics inside)."""

from .render import SCHEMAS, FigureSpec, SchemaError, load_columns, render, render_all

__all__ = [
    "SCHEMAS",
    "FigureSpec",
    "SchemaError",
    "load_columns",
    "render",
    "render_all",
]
