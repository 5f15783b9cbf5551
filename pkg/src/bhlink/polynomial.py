"""Invertible polynomials as Fermat / chain / cycle block decompositions.

An invertible polynomial in n variables is a sum of exactly n monomials whose
exponent matrix is nonsingular; it always decomposes into blocks of three
shapes:

* Fermat  x_i^a,
* chain   x_{c0}^{e0} + x_{c0} x_{c1}^{e1} + ... + x_{c(m-1)} x_{cm}^{em},
* cycle   x_{c0}^{e0} x_{c1} + x_{c1}^{e1} x_{c2} + ... + x_{cm}^{em} x_{c0}.

The exponent matrix convention used throughout: row i holds the monomial that
*owns* variable i, i.e. the one carrying the block exponent e_i on x_i, so
the block exponents sit on the diagonal and every row has at most one
off-diagonal entry, which equals 1.  With this convention the weight
equation reads  A . w = d . (1, ..., 1)  and the transpose-dual polynomial is
literally the transposed matrix: chains reverse orientation, cycles reverse
their cyclic orientation, Fermat blocks are fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotInvertibleShape

__all__ = [
    "BlockKind",
    "Block",
    "InvertiblePolynomial",
    "from_exponent_matrix",
    "classify",
]

Matrix = list[list[int]]


class BlockKind(str, Enum):
    FERMAT = "fermat"
    CHAIN = "chain"
    CYCLE = "cycle"


# Violation codes returned by InvertiblePolynomial.validate().
NOT_A_PARTITION = "NotAPartition"
FERMAT_EXPONENT_TOO_SMALL = "FermatExponentTooSmall"
CHAIN_HEAD_TOO_SMALL = "ChainHeadTooSmall"
CHAIN_TAIL_TOO_SMALL = "ChainTailTooSmall"
CYCLE_EXPONENT_TOO_SMALL = "CycleExponentTooSmall"
EVEN_CYCLE_DEGENERATE = "EvenCycleDegenerate"
SINGULAR_MATRIX = "SingularMatrix"
BLOCK_TOO_SHORT = "BlockTooShort"


@dataclass(frozen=True)
class Block:
    """One Fermat, chain or cycle block.

    ``variables`` lists the variable indices in block order (chain order for
    chains, cyclic successor order for cycles) and ``exponents`` is aligned
    with it.  Cycles are stored rotated so the smallest variable comes first,
    which makes equality and deduplication deterministic; rotating a cycle
    relabels nothing, while reflecting it changes the monomial set and is a
    genuinely different polynomial.
    """

    kind: BlockKind
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.variables) != len(self.exponents):
            raise ValueError("variables and exponents must have equal length")
        if self.kind is BlockKind.CYCLE and self.variables:
            # canonical rotation: minimal variable first
            pivot = self.variables.index(min(self.variables))
            if pivot:
                object.__setattr__(
                    self, "variables", self.variables[pivot:] + self.variables[:pivot]
                )
                object.__setattr__(
                    self, "exponents", self.exponents[pivot:] + self.exponents[:pivot]
                )

    def determinant(self) -> int:
        """Determinant of the block's own exponent matrix."""
        prod = 1
        for e in self.exponents:
            prod *= e
        if self.kind is BlockKind.CYCLE:
            # expansion of the cyclic matrix: prod(e) - (-1)^len
            return prod - (-1) ** len(self.variables)
        return prod

    def _sort_key(self) -> tuple[int, int]:
        rank = {BlockKind.FERMAT: 0, BlockKind.CHAIN: 1, BlockKind.CYCLE: 2}[self.kind]
        return (rank, self.variables[0])


@dataclass(frozen=True)
class InvertiblePolynomial:
    """A block decomposition of an invertible polynomial on n_vars variables.

    Blocks are stored in canonical order (Fermat blocks by variable index,
    then chains by head index, then cycles by minimal index), so dataclass
    equality is structural equality of polynomials.
    """

    n_vars: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=Block._sort_key))
        )

    # ----- structure -------------------------------------------------------

    def validate(self) -> list[str]:
        """Return the list of violated structural conditions (empty == valid)."""
        violations: list[str] = []
        seen = [v for b in self.blocks for v in b.variables]
        if sorted(seen) != list(range(self.n_vars)):
            violations.append(NOT_A_PARTITION)
        for b in self.blocks:
            if b.kind is BlockKind.FERMAT:
                if len(b.variables) != 1:
                    violations.append(BLOCK_TOO_SHORT)
                elif b.exponents[0] < 2:
                    violations.append(FERMAT_EXPONENT_TOO_SMALL)
            elif b.kind is BlockKind.CHAIN:
                if len(b.variables) < 2:
                    violations.append(BLOCK_TOO_SHORT)
                    continue
                if b.exponents[0] < 2:
                    violations.append(CHAIN_HEAD_TOO_SMALL)
                if any(e < 1 for e in b.exponents[1:]):
                    violations.append(CHAIN_TAIL_TOO_SMALL)
            else:
                if len(b.variables) < 2:
                    violations.append(BLOCK_TOO_SHORT)
                    continue
                if any(e < 1 for e in b.exponents):
                    violations.append(CYCLE_EXPONENT_TOO_SMALL)
                if len(b.variables) % 2 == 0:
                    # even cycles with a_j = 1 on all even or all odd positions
                    # have non-unique weights
                    evens = b.exponents[0::2]
                    odds = b.exponents[1::2]
                    if all(e == 1 for e in evens) or all(e == 1 for e in odds):
                        violations.append(EVEN_CYCLE_DEGENERATE)
        if NOT_A_PARTITION not in violations:
            det = 1
            for b in self.blocks:
                det *= b.determinant()
            if det == 0:
                violations.append(SINGULAR_MATRIX)
        return violations

    def exponent_matrix(self) -> Matrix:
        """The n x n exponent matrix, row i = monomial owning variable i."""
        n = self.n_vars
        m = [[0] * n for _ in range(n)]
        for b in self.blocks:
            vs, es = b.variables, b.exponents
            if b.kind is BlockKind.FERMAT:
                m[vs[0]][vs[0]] = es[0]
            elif b.kind is BlockKind.CHAIN:
                m[vs[0]][vs[0]] = es[0]
                for k in range(1, len(vs)):
                    m[vs[k]][vs[k]] = es[k]
                    m[vs[k]][vs[k - 1]] = 1
            else:
                for k, v in enumerate(vs):
                    m[v][v] = es[k]
                    m[v][vs[(k + 1) % len(vs)]] += 1
        return m

    def transpose(self) -> InvertiblePolynomial:
        """The polynomial of the transposed exponent matrix (an involution)."""
        m = self.exponent_matrix()
        n = self.n_vars
        mt = [[m[c][r] for c in range(n)] for r in range(n)]
        return from_exponent_matrix(mt)

    def exponent_of(self, variable: int) -> int:
        """The block exponent carried by one variable (its diagonal entry)."""
        for b in self.blocks:
            if variable in b.variables:
                return b.exponents[b.variables.index(variable)]
        raise ValueError(f"variable {variable} not in any block")

    def render(self) -> str:
        """Text form in standard notation, e.g. ``z0^3 + z0*z1^2 + z4*z2^5``.

        Monomials appear in owner-variable order; in two-variable monomials
        the exponent-1 variable is written first.
        """
        rows = self.exponent_matrix()
        parts = []
        for r, row in enumerate(rows):
            if not any(row):
                continue
            own = f"z{r}" if row[r] == 1 else f"z{r}^{row[r]}"
            other = [c for c in range(self.n_vars) if c != r and row[c]]
            parts.append(f"z{other[0]}*{own}" if other else own)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _resolve_owners(rows: list[list[tuple[int, int]]], n: int) -> list[int] | None:
    """Assign to each matrix row the variable it owns (backtracking search).

    Rows with two exponent-1 entries are ambiguous; every variable must own
    exactly one row for the matrix to decompose.
    """
    owner = [-1] * len(rows)
    used = [False] * n

    def candidates(entries: list[tuple[int, int]]) -> list[int]:
        if len(entries) == 1:
            return [entries[0][0]]
        (c1, e1), (c2, e2) = entries
        opts = []
        if e2 == 1:
            opts.append(c1)
        if e1 == 1 and c2 not in opts:
            opts.append(c2)
        return opts

    def place(r: int) -> bool:
        if r == len(rows):
            return True
        for c in candidates(rows[r]):
            if not used[c]:
                owner[r], used[c] = c, True
                if place(r + 1):
                    return True
                owner[r], used[c] = -1, False
        return False

    return owner if place(0) else None


def from_exponent_matrix(matrix: Matrix) -> InvertiblePolynomial:
    """Recover the unique block decomposition of a valid exponent matrix.

    Raises :class:`NotInvertibleShape` when a row has more than two nonzero
    entries, an off-diagonal entry exceeds 1, the determinant vanishes, or
    the pointer graph between monomials is not a disjoint union of paths and
    cycles.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NotInvertibleShape("matrix is not square")
    rows: list[list[tuple[int, int]]] = []
    for row in matrix:
        entries = [(c, e) for c, e in enumerate(row) if e != 0]
        if any(e < 0 for _, e in entries):
            raise NotInvertibleShape("negative exponent")
        if not 1 <= len(entries) <= 2:
            raise NotInvertibleShape(
                f"row {row} has {len(entries)} nonzero entries, expected 1 or 2"
            )
        rows.append(entries)
    if len(rows) != n:
        raise NotInvertibleShape("row/variable count mismatch")

    owner = _resolve_owners(rows, n)
    if owner is None:
        raise NotInvertibleShape("no consistent owner assignment for the rows")

    # pointer graph: owner -> the other variable of its row (if any)
    points_to: dict[int, int] = {}
    exp_of: dict[int, int] = {}
    for r, entries in enumerate(rows):
        o = owner[r]
        exp_of[o] = dict(entries)[o]
        rest = [c for c, _ in entries if c != o]
        if rest:
            if dict(entries)[rest[0]] != 1:
                raise NotInvertibleShape("off-diagonal exponent exceeds 1")
            points_to[o] = rest[0]

    indegree = {v: 0 for v in range(n)}
    for tgt in points_to.values():
        indegree[tgt] += 1
        if indegree[tgt] > 1:
            raise NotInvertibleShape("pointer graph is not a union of paths and cycles")

    blocks: list[Block] = []
    visited: set[int] = set()
    for start in range(n):
        if start in visited or start in points_to:
            continue
        # start owns a pure row: Fermat if nothing points at it, chain head otherwise
        chain = [start]
        cur = start
        while True:
            prev = [v for v, t in points_to.items() if t == cur and v not in visited and v != cur]
            nxt = [v for v in prev if v not in chain]
            if not nxt:
                break
            chain.append(nxt[0])
            cur = nxt[0]
        visited.update(chain)
        if len(chain) == 1:
            blocks.append(Block(BlockKind.FERMAT, (start,), (exp_of[start],)))
        else:
            blocks.append(
                Block(BlockKind.CHAIN, tuple(chain), tuple(exp_of[v] for v in chain))
            )
    # remaining variables sit on directed cycles
    for start in range(n):
        if start in visited:
            continue
        cyc = [start]
        cur = points_to.get(start)
        while cur is not None and cur != start:
            if cur in visited or cur in cyc:
                raise NotInvertibleShape("pointer graph is not a union of paths and cycles")
            cyc.append(cur)
            cur = points_to.get(cur)
        if cur != start:
            raise NotInvertibleShape("pointer graph is not a union of paths and cycles")
        visited.update(cyc)
        blocks.append(Block(BlockKind.CYCLE, tuple(cyc), tuple(exp_of[v] for v in cyc)))

    poly = InvertiblePolynomial(n, tuple(blocks))
    det = 1
    for b in poly.blocks:
        det *= b.determinant()
    if det == 0:
        raise NotInvertibleShape("singular exponent matrix")
    return poly


def classify(poly: InvertiblePolynomial) -> str:
    """Type label computed from the block multiset.

    One of ``BP``, ``Chain``, ``Cycle``, ``BP-Chain``, ``BP-Cycle``,
    ``Chain-Cycle``, ``Cycle-Cycle`` or ``Mixed(...)``.
    """
    counts = {BlockKind.FERMAT: 0, BlockKind.CHAIN: 0, BlockKind.CYCLE: 0}
    for b in poly.blocks:
        counts[b.kind] += 1
    nf, nch, ncy = counts[BlockKind.FERMAT], counts[BlockKind.CHAIN], counts[BlockKind.CYCLE]
    if nch == 0 and ncy == 0:
        return "BP"
    if nf == 0 and nch == 1 and ncy == 0:
        return "Chain"
    if nf == 0 and nch == 0 and ncy == 1:
        return "Cycle"
    if nch == 1 and ncy == 0:
        return "BP-Chain"
    if nch == 0 and ncy == 1:
        return "BP-Cycle"
    if nf == 0 and nch == 1 and ncy == 1:
        return "Chain-Cycle"
    if nf == 0 and nch == 0 and ncy == 2:
        return "Cycle-Cycle"
    kinds = ",".join(
        f"{kind.value}x{count}" for kind, count in counts.items() if count
    )
    return f"Mixed({kinds})"
