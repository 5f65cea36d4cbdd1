"""Expression DSL, file formats, printer and the command line front end."""

from .files import load_problem, load_tower
from .main import main
from .parser import parse_expression
from .printer import format_element

__all__ = ["load_problem", "load_tower", "main", "parse_expression", "format_element"]
