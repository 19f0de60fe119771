# SL_n leading-term correction by the number of twists fixing a multisegment
#
# The characters of GL_n/Z SL_n are modelled as the index set 0..n-1 acting on
# cuspidal symbols through a user-supplied table.  The table is trusted: it is
# not checked to come from a cyclic group.
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from errors import InvalidInput, ProblemParseError, UnknownSymbol
from growth import LeadingTerm, leading_term
from segments import CuspidalSymbol, Multisegment, Segment

Perm = Dict[str, CuspidalSymbol]


@dataclass(frozen=True)
class TwistActionTable:
    """perms[k] sends a symbol id to the symbol of its twist by the k-th character"""

    n: int
    perms: Tuple[Tuple[Tuple[str, CuspidalSymbol], ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"twist table needs n >= 1, got {self.n}")
        if len(self.perms) != self.n:
            raise InvalidInput(f"twist table declares n={self.n} but lists {len(self.perms)} actions")
        first = dict(self.perms[0])
        if any(sym.id != sid for sid, sym in first.items()):
            raise InvalidInput("action 0 of a twist table must be the identity")
        for k, perm in enumerate(self.perms):
            for sid, image in perm:
                source = self.symbols.get(sid)
                if source is not None and source.size != image.size:
                    raise InvalidInput(f"action {k} sends {sid} to {image.id} of a different size")

    @property
    def symbols(self) -> Dict[str, CuspidalSymbol]:
        seen: Dict[str, CuspidalSymbol] = {}
        for perm in self.perms:
            for _, image in perm:
                seen.setdefault(image.id, image)
        return seen

    def perm(self, k: int) -> Perm:
        return dict(self.perms[k])

    @classmethod
    def from_cycles(cls, n: int, cycles_per_action: Sequence[Sequence[Sequence[str]]],
                    symbols: Mapping[str, CuspidalSymbol]) -> "TwistActionTable":
        """Build from cycle notation, e.g. [[], [["rho", "chirho"]]]; missing ids are fixed"""
        if not isinstance(cycles_per_action, (list, tuple)):
            raise ProblemParseError(f"twist_table.perms must be a list of actions, got {cycles_per_action!r}")
        perms: List[Tuple[Tuple[str, CuspidalSymbol], ...]] = []
        for k, cycles in enumerate(cycles_per_action):
            if not isinstance(cycles, (list, tuple)):
                raise ProblemParseError(f"twist_table.perms[{k}] must be a list of cycles, got {cycles!r}")
            mapping = {sid: sym for sid, sym in symbols.items()}
            for c, cycle in enumerate(cycles):
                if not isinstance(cycle, (list, tuple)):
                    raise ProblemParseError(f"twist_table.perms[{k}][{c}] must be a list of symbol ids, got {cycle!r}")
                for sid in cycle:
                    if not isinstance(sid, str):
                        raise ProblemParseError(f"twist_table.perms[{k}][{c}] holds a non-string symbol id {sid!r}")
                    if sid not in symbols:
                        raise UnknownSymbol(f"twist table action {k} names undeclared symbol {sid!r}")
                for src, dst in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                    mapping[src] = symbols[dst]
            perms.append(tuple(sorted(mapping.items())))
        return cls(n, tuple(perms))


def twist_multisegment(a: Multisegment, perm: Mapping[str, CuspidalSymbol]) -> Multisegment:
    """Twist every segment by a character; offsets and lengths are unchanged"""
    twisted = []
    for s in a:
        if s.symbol.id not in perm:
            raise UnknownSymbol(f"twist is not defined on symbol {s.symbol.id!r}")
        twisted.append(Segment(perm[s.symbol.id], s.offset, s.length))
    return Multisegment.of(twisted)


def twist_stabilizer_count(a: Multisegment, table: TwistActionTable) -> int:
    """d = number of characters chi with a (x) chi = a as multisets"""
    return sum(1 for k in range(table.n) if twist_multisegment(a, table.perm(k)) == a)


def sl_leading_term(a: Multisegment, d: int) -> LeadingTerm:
    """Leading term for an irreducible constituent of the restriction to SL_n"""
    if d < 1:
        raise InvalidInput(f"stabilizer count must be >= 1, got {d}")
    lt = leading_term(a)
    return LeadingTerm(coeff=lt.coeff / d, exponent=lt.exponent)
