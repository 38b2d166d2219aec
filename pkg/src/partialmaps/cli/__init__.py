from .main import main
from .parse import PolyExpr, PolyParseError, parse_poly

__all__ = ["main", "PolyExpr", "PolyParseError", "parse_poly"]
