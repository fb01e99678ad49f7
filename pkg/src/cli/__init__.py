from .main_cli import cli as main_cli
from .render import DiagramBuilder, Wire, diagram_graph, dot_lines, render_dot
from .run_config import RunConfig

__all__ = ["main_cli", "DiagramBuilder", "Wire", "diagram_graph", "dot_lines", "render_dot", "RunConfig"]
