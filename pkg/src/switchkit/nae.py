"""Monotone NAE k-SAT formulas: evaluation, padding, text format.

Text format: header "nae k n m", then m lines of k distinct 1-based variable
indices.  Variables are 0-based in memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import SizeMismatch

Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class NaeFormula:
    num_vars: int
    k: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != self.k or len(set(clause)) != self.k:
                raise ValueError(f"clause {clause} is not {self.k} distinct literals")
            if any(not 0 <= v < self.num_vars for v in clause):
                raise ValueError(f"clause {clause} has out-of-range variables")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def nae_eval(f: NaeFormula, a: Assignment) -> bool:
    """True iff every clause has at least one TRUE and one FALSE literal."""
    if len(a) != f.num_vars:
        raise SizeMismatch(f"assignment length {len(a)} != {f.num_vars} variables")
    for clause in f.clauses:
        values = [a[v] for v in clause]
        if all(values) or not any(values):
            return False
    return True


def is_nae_satisfiable(f: NaeFormula) -> bool:
    return any(nae_eval(f, a) for a in product((False, True), repeat=f.num_vars))


def pad_nae(f: NaeFormula) -> NaeFormula:
    """Lift arity k-1 to k: k fresh variables, each original clause replicated
    once per fresh variable, plus the all-fresh clause.  Equisatisfiable."""
    k = f.k + 1
    if k < 4:
        raise ValueError("padding starts from arity 3 (target arity >= 4)")
    fresh = tuple(range(f.num_vars, f.num_vars + k))
    clauses = [clause + (a,) for clause in f.clauses for a in fresh]
    clauses.append(fresh)
    return NaeFormula(f.num_vars + k, k, tuple(clauses))


def parse_nae(text: str) -> NaeFormula:
    tokens = text.split()
    if len(tokens) < 4 or tokens[0] != "nae":
        raise ValueError("expected header: nae <k> <num-vars> <num-clauses>")
    k, n, m = int(tokens[1]), int(tokens[2]), int(tokens[3])
    body = tokens[4:]
    if len(body) != k * m:
        raise ValueError(f"expected {k * m} literals, got {len(body)}")
    clauses = tuple(
        tuple(int(body[i * k + j]) - 1 for j in range(k)) for i in range(m)
    )
    return NaeFormula(n, k, clauses)


def format_nae(f: NaeFormula) -> str:
    lines = [f"nae {f.k} {f.num_vars} {f.num_clauses}"]
    lines.extend(" ".join(str(v + 1) for v in clause) for clause in f.clauses)
    return "\n".join(lines) + "\n"
