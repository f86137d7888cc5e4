"""Command-line front end: job files, element expressions and reports."""

from cli_app.expression_parser import parse_element
from cli_app.jobs import JobSpec, build_matrix, load_job
from cli_app.main import run_command

__all__ = ["JobSpec", "build_matrix", "load_job", "parse_element", "run_command"]
