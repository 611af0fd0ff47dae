from core.cli.errors import ProblemFileError
from core.cli.problem_file import LoadedProblem, ProblemDocument, load_problem, parse_problem, serialize_problem

__all__ = [
    "LoadedProblem",
    "ProblemDocument",
    "ProblemFileError",
    "load_problem",
    "parse_problem",
    "serialize_problem",
]
