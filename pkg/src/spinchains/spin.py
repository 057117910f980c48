"""The spin-lowest K-type of a chain parameter.

The lowest K-type of the module attached to a disjoint union of chains is
the multiset of chain averages, each average k_i repeated d_i = length
times.  The spin-lowest K-type tau is obtained from that layout by a local
rewriting rule for every linked pair of chains C_i, C_j with i < j in
canonical order.  With p := (C_{j,1} - C_{i,d_i} + 1)/2 and
q := (C_{j,1} - C_{i,d_i} + 1)/2 the three configurations are:

  (a) C_j nested strictly inside the span of C_i (d_j <= p):
      row i gets k_i+p, k_i+p-1, ..., k_i+p-d_j+1 starting at slot d_i-p+1,
      row j becomes k_j-p, k_j-p+1, ..., k_j-p+d_j-1.
  (b) C_j staggered below C_i (d_j > p):
      the last p slots of row i become k_i+1, ..., k_i+p,
      the first p slots of row j become k_j-1, ..., k_j-p.
  (c) C_i nested inside the span of C_j:
      row i becomes k_i+q-d_i+1, ..., k_i+q,
      slots q-d_i+1 .. q of row j become k_j-(q-d_i+1), ..., k_j-q.

Each slot is written at most once over the whole run; a second write
raises AlgorithmViolation, which never fires on a valid parameter.  The
resulting tau always satisfies {tau - rho} = 2*lambda - rho, making tau a
K-type of minimal spin norm, the one contributing to Dirac cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .chains import Chain, ChainSet, canonical_order, is_interlaced, is_linked, lambda_doubled
from .weights import Weight, dominant, rho_doubled


class AlgorithmViolation(RuntimeError):
    """A rewriting rule tried to touch a layout slot twice."""


class Rule(NamedTuple):
    kind: str  # "a", "b" or "c"
    param: int  # the p of rules a/b, the q of rule c


class AppliedRule(NamedTuple):
    kind: str
    i: int  # canonical index of the earlier chain
    j: int  # canonical index of the later chain
    param: int


def classify_link(ci: Chain, cj: Chain) -> Rule:
    """Which rewriting rule a linked pair falls under, with its parameter.

    Expects ci to precede cj in canonical order.  Linked chains have
    opposite parity, so the parameter (C_{j,1} - C_{i,d_i} + 1)/2 is an
    exact integer.
    """
    if not is_linked(ci, cj):
        raise ValueError("chains are not linked")
    if (-ci.avg, ci.length) > (-cj.avg, cj.length):
        raise ValueError("chains not in canonical precedence")
    span = cj.top - ci.bottom
    if span % 2 == 0:
        raise AssertionError("linked chains must have opposite parity")
    param = (span + 1) // 2
    if ci.top > cj.top:
        return Rule("a", param) if cj.length <= param else Rule("b", param)
    return Rule("c", param)


class TauLayout:
    """Per-chain rows of coordinates, one row per chain in canonical order.

    Row i starts as the constant k_i repeated d_i times; rules overwrite
    slots, and every slot may be written at most once.
    """

    def __init__(self, chains: tuple[Chain, ...]):
        self.chains = chains
        self.rows = [[c.avg] * c.length for c in chains]
        self._written = [[False] * c.length for c in chains]

    def write(self, row: int, pos: int, value: int) -> None:
        if not 0 <= pos < len(self.rows[row]):
            raise AlgorithmViolation(f"slot {pos} outside row {row}")
        if self._written[row][pos]:
            raise AlgorithmViolation(f"slot {pos} of row {row} written twice")
        self._written[row][pos] = True
        self.rows[row][pos] = value

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


def apply_rule(layout: TauLayout, i: int, j: int, rule: Rule) -> TauLayout:
    """Rewrite rows i and j of the layout in place according to the rule."""
    ci, cj = layout.chains[i], layout.chains[j]
    ki, kj = ci.avg, cj.avg
    if rule.kind == "a":
        p = rule.param
        for t in range(cj.length):
            layout.write(i, ci.length - p + t, ki + p - t)
            layout.write(j, t, kj - p + t)
    elif rule.kind == "b":
        p = rule.param
        for t in range(p):
            layout.write(i, ci.length - p + t, ki + 1 + t)
            layout.write(j, t, kj - 1 - t)
    elif rule.kind == "c":
        q = rule.param
        for t in range(ci.length):
            layout.write(i, t, ki + (q - ci.length + 1) + t)
            layout.write(j, q - ci.length + t, kj - (q - ci.length + 1) - t)
    else:
        raise ValueError(f"unknown rule kind {rule.kind!r}")
    return layout


@dataclass(frozen=True)
class SpinResult:
    """Outcome of one run: everything is in doubled coordinates except rows."""

    chains: ChainSet  # in canonical order
    tau: Weight  # doubled
    lambda2: Weight  # 2*lambda, doubled
    gamma: Weight  # {tau - rho}, doubled
    rows: tuple[tuple[int, ...], ...]  # final layout, standard scale
    trace: tuple[AppliedRule, ...]  # in execution order


def lowest_k_type(cs: ChainSet) -> Weight:
    """Highest weight of the lowest K-type, doubled: averages with multiplicity."""
    vals = []
    for c in cs.chains:
        vals.extend([2 * c.avg] * c.length)
    return dominant(vals)


def spin_lowest_k_type(cs: ChainSet) -> SpinResult:
    """Run the rewriting rules over all linked pairs and assemble tau.

    Chains are added one at a time in canonical order; each new chain is
    resolved against every earlier chain linked with it.
    """
    ordered = canonical_order(cs)
    layout = TauLayout(ordered.chains)
    trace = []
    for m in range(1, len(ordered.chains)):
        for i in range(m):
            if is_linked(ordered.chains[i], ordered.chains[m]):
                rule = classify_link(ordered.chains[i], ordered.chains[m])
                apply_rule(layout, i, m, rule)
                trace.append(AppliedRule(rule.kind, i, m, rule.param))
    tau = dominant(2 * x for x in layout.flatten())
    lambda2 = tuple(2 * e for e in lambda_doubled(cs))
    rho = rho_doubled(cs.n)
    gamma = dominant(t - r for t, r in zip(tau, rho))
    return SpinResult(
        chains=ordered,
        tau=tau,
        lambda2=lambda2,
        gamma=gamma,
        rows=tuple(tuple(row) for row in layout.rows),
        trace=tuple(trace),
    )


def verify_spin_identity(res: SpinResult) -> bool:
    """Check {tau - rho} = 2*lambda - rho exactly, in doubled arithmetic.

    2*lambda - rho is automatically weakly decreasing, so no sort is needed
    on the right-hand side.
    """
    rho = rho_doubled(len(res.tau))
    lhs = dominant(t - r for t, r in zip(res.tau, rho))
    rhs = tuple(l - r for l, r in zip(res.lambda2, rho))
    return lhs == rhs


def dirac_report(cs: ChainSet) -> tuple[Weight, int]:
    """Dirac cohomology data of a scattered parameter of SL(n).

    Returns the highest weight {tau - rho} (doubled) and the multiplicity
    2^floor((n-1)/2) with which it occurs.
    """
    if cs.min_entry() != 1 or not is_interlaced(cs):
        raise ValueError("not a scattered parameter: need interlaced chains with smallest entry 1")
    res = spin_lowest_k_type(cs)
    return res.gamma, 2 ** ((cs.n - 1) // 2)
