# Text input and output package
from .algebra_file import build_algebra, dump_config, load_config, parse_config, parse_element
from .evaluator import Target, context_for, evaluate, make_target, normalize
from .parser import ParseContext, parse
from .printer import print_element, print_monomial

__all__ = [
    "build_algebra", "dump_config", "load_config", "parse_config", "parse_element",
    "Target", "context_for", "evaluate", "make_target", "normalize",
    "ParseContext", "parse", "print_element", "print_monomial",
]
