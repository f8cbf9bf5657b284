"""Render the coupledosc comparison figures from CLI CSV output."""

from .spec import FigureSpec, RenderError, parse_figure_spec
from .render import render

__all__ = ["FigureSpec", "RenderError", "parse_figure_spec", "render"]
