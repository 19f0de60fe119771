# Main application module for gkgrowth
#
# GrowthApp coordinates the feature modules for the command line: it loads
# problem files, resolves cuspidal sources and returns results for printing.
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from config import DEFAULT_SETTINGS, SCHEMA_VERSION
from cuspidal import (
    AIUnramifiedQuadratic,
    Explicit,
    GL2Case,
    LevelZero,
    LeadingOnly,
    MurnaghanUnramified,
    murnaghan_ramified,
    source_from_json,
)
from errors import InvalidInput, ProblemParseError, ProblemSemanticError, UnknownSymbol
from growth import LeadingTerm, exact_growth, gk_dimension, leading_term
from logging_config import log_debug, log_threshold_warning, log_warning
from qring import XLaurent, eval_dim
from segments import CuspidalSymbol, Multisegment, Poset, Segment, is_generic, parse_multisegment
from segments import poset_below, poset_to_dot
from sln import TwistActionTable, sl_leading_term, twist_stabilizer_count
from utils import load_settings, read_json_file


@dataclass(frozen=True)
class ProblemFile:
    """One problem instance: declared symbols, a multisegment and optional extras"""

    symbols: Dict[str, CuspidalSymbol]
    multisegment: Multisegment
    twist_table: Optional[TwistActionTable] = None
    evaluation: Optional[Tuple[int, int]] = None
    schema_version: int = SCHEMA_VERSION
    path: Optional[str] = field(default=None, compare=False)

    @classmethod
    def load(cls, path):
        return cls.from_json(read_json_file(path), path=path)

    @classmethod
    def from_json(cls, data, path=None):
        if not isinstance(data, dict):
            raise ProblemParseError("a problem file must be a JSON object")
        if "schema_version" not in data:
            raise ProblemParseError("problem file has no schema_version")
        if data["schema_version"] != SCHEMA_VERSION:
            raise ProblemSemanticError(f"unsupported schema_version {data['schema_version']!r}; "
                                       f"this build reads {SCHEMA_VERSION}")
        try:
            symbols = _read_symbols(data.get("symbols"))
            multisegment = _read_multisegment(data.get("multisegment"), symbols)
            twist_table = _read_twist_table(data.get("twist_table"), symbols)
            evaluation = _read_evaluation(data.get("evaluation"))
        except InvalidInput as e:
            raise ProblemSemanticError(str(e)) from e
        if not len(multisegment):
            raise ProblemSemanticError("the multisegment is empty")
        return cls(symbols=symbols, multisegment=multisegment, twist_table=twist_table,
                   evaluation=evaluation, schema_version=SCHEMA_VERSION, path=path)

    @property
    def sources(self):
        return {sid: sym.source for sid, sym in self.symbols.items() if sym.source is not None}


def _read_symbols(entries) -> Dict[str, CuspidalSymbol]:
    if not isinstance(entries, list) or not entries:
        raise ProblemParseError("\"symbols\" must be a nonempty list")
    symbols: Dict[str, CuspidalSymbol] = {}
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict) or "id" not in entry or "size" not in entry:
            raise ProblemParseError(f"symbols[{k}]: declaration needs \"id\" and \"size\": {entry!r}")
        sid, size = entry["id"], entry["size"]
        if not isinstance(sid, str):
            raise ProblemParseError(f"symbols[{k}].id must be a string, got {sid!r}")
        if sid in symbols:
            raise ProblemSemanticError(f"symbol {sid!r} is declared twice")
        if not _is_int(size):
            raise ProblemParseError(f"symbols[{k}].size must be an integer, got {size!r}")
        source = None
        if entry.get("source") is not None:
            source = source_from_json(entry["source"], size)
            if source.n != size:
                raise ProblemSemanticError(f"source of {sid!r} describes GL_{source.n}, symbol has size {size}")
        symbols[sid] = CuspidalSymbol(sid, size, source)
    return symbols


def _read_multisegment(value, symbols) -> Multisegment:
    if isinstance(value, str):
        return parse_multisegment(value, symbols)
    if not isinstance(value, list):
        raise ProblemParseError("\"multisegment\" must be a list of [symbol, offset, length] or compact text")
    segments = []
    for k, triple in enumerate(value):
        if (not isinstance(triple, list) or len(triple) != 3
                or not all(_is_int(x) for x in triple[1:])):
            raise ProblemParseError(f"multisegment[{k}] must be [symbol, offset, length], got {triple!r}")
        sid, offset, length = triple
        if not isinstance(sid, str):
            raise ProblemParseError(f"multisegment[{k}][0] must be a symbol id, got {sid!r}")
        if sid not in symbols:
            raise UnknownSymbol(f"segment refers to undeclared symbol {sid!r}")
        segments.append(Segment(symbols[sid], offset, length))
    return Multisegment.of(segments)


def _read_twist_table(value, symbols) -> Optional[TwistActionTable]:
    if value is None:
        return None
    if not isinstance(value, dict) or "n" not in value or "perms" not in value:
        raise ProblemParseError("\"twist_table\" needs \"n\" and \"perms\"")
    if not _is_int(value["n"]):
        raise ProblemParseError(f"twist_table.n must be an integer, got {value['n']!r}")
    return TwistActionTable.from_cycles(value["n"], value["perms"], symbols)


def _read_evaluation(value) -> Optional[Tuple[int, int]]:
    if value is None:
        return None
    if not isinstance(value, dict):
        raise ProblemParseError(f"evaluation must be an object, got {value!r}")
    for key in ("q", "N"):
        if not _is_int(value.get(key)):
            raise ProblemParseError(f"evaluation.{key} must be an integer, got {value.get(key)!r}")
    return value["q"], value["N"]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass
class GKReport:
    n: int
    gk: int
    leading: LeadingTerm
    generic: bool


class GrowthApp:
    """Main application class that coordinates all components"""

    def __init__(self, settings=None):
        self.settings = dict(DEFAULT_SETTINGS)
        self.settings.update(settings if settings is not None else load_settings())

    def load_problem(self, path) -> ProblemFile:
        problem = ProblemFile.load(path)
        log_debug(f"loaded {path}: {problem.multisegment.render()} (n = {problem.multisegment.n})")
        return problem

    def gk_report(self, problem: ProblemFile) -> GKReport:
        a = problem.multisegment
        return GKReport(n=a.n, gk=gk_dimension(a), leading=leading_term(a), generic=is_generic(a))

    def exact(self, problem: ProblemFile) -> XLaurent:
        return exact_growth(problem.multisegment, problem.sources)

    def poset(self, problem: ProblemFile, node_limit: Optional[int] = None) -> Poset:
        limit = node_limit if node_limit is not None else self.settings["poset_node_limit"]
        return poset_below(problem.multisegment, node_limit=limit)

    def poset_dot(self, problem: ProblemFile, node_limit: Optional[int] = None) -> str:
        return poset_to_dot(self.poset(problem, node_limit), annotate=lambda b: f"gk = {gk_dimension(b)}")

    def evaluate(self, problem: ProblemFile, q0: Optional[int] = None, N: Optional[int] = None) -> int:
        if (q0 is None or N is None) and problem.evaluation is None:
            raise ProblemSemanticError("no --q/--N given and the problem file has no evaluation block")
        file_q, file_N = problem.evaluation or (None, None)
        q0 = q0 if q0 is not None else file_q
        N = N if N is not None else file_N
        for sym in problem.multisegment.symbols:
            source = problem.symbols[sym.id].source
            if isinstance(source, Explicit) and N < source.threshold:
                log_threshold_warning(N, source.threshold)
        return eval_dim(self.exact(problem), q0, N)

    def sl(self, problem: ProblemFile) -> Tuple[int, LeadingTerm]:
        if problem.twist_table is None:
            raise ProblemSemanticError("the sl command needs a \"twist_table\" in the problem file")
        if problem.twist_table.n != problem.multisegment.n:
            log_warning(f"twist table size {problem.twist_table.n} differs from n = {problem.multisegment.n}")
        d = twist_stabilizer_count(problem.multisegment, problem.twist_table)
        return d, sl_leading_term(problem.multisegment, d)

    def cuspidal(self, kind: str, n: Optional[int] = None, j: int = 0, case: str = "level0",
                 level: Optional[int] = None, ell: int = 0):
        """Growth polynomial of a single supercuspidal source, or a RamifiedGrowth"""
        if kind == "murnaghan_ram":
            return murnaghan_ramified(_need(n, "--n"), j)
        if kind == "leading":
            return LeadingOnly(_need(n, "--n"))
        if kind == "murnaghan_unr":
            return MurnaghanUnramified(_need(n, "--n"), j).full_growth()
        if kind == "level0":
            return LevelZero(_need(n, "--n")).full_growth()
        if kind == "gl2":
            return GL2Case(case, level).full_growth()
        if kind == "ai_quad":
            return AIUnramifiedQuadratic(ell).full_growth()
        raise InvalidInput(f"unknown cuspidal kind {kind!r}")


def _need(value, flag):
    if value is None:
        raise InvalidInput(f"{flag} is required for this cuspidal kind")
    return value
