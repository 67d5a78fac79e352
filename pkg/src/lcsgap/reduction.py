"""Two-step reduction from a graph to a multi-string LCS gap instance.

Step 1 builds, per vertex i, the pair of vertex-alphabet strings

    X_i  = v_1 .. v_{i-1} v_{i+1} .. v_n  v_i  <neighbors above i, ascending>
    X'_i = <neighbors below i, ascending>  v_i  v_1 .. v_{i-1} v_{i+1} .. v_n

whose common subsequences are exactly the increasing vertex sequences that
form cliques.  Step 2 substitutes a certified low-pairwise-LCS block S_j
for every occurrence of v_j, producing strings over the small alphabet.

Parameters are driven by (beta, gamma) with alpha derived as beta^2/8 so
the coupling beta = sqrt(8*alpha) stays exact in rationals; thresholds
ell_yes = k*m and ell_no = 2*beta*m*n are compared exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CertificationError, FormatError, ParameterError, WitnessError
from .families import StringFamily
from .graph import Graph
from .lcs import is_common_subsequence


@dataclass(frozen=True)
class ReductionParams:
    n: int
    k: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    m: int
    ell_yes: int
    ell_no: Fraction


@dataclass(frozen=True)
class SymbolicInstance:
    n: int
    x_strings: tuple
    x_prime_strings: tuple
    source: Graph

    @property
    def all_strings(self) -> tuple:
        return self.x_strings + self.x_prime_strings


@dataclass(frozen=True)
class BlockInstance:
    family: StringFamily
    y_strings: tuple
    y_prime_strings: tuple
    block_layout: tuple  # per output string, the ordered block ids it was built from
    params: Optional[ReductionParams]
    symbolic: SymbolicInstance

    @property
    def all_strings(self) -> tuple:
        return self.y_strings + self.y_prime_strings

    @property
    def n(self) -> int:
        return self.symbolic.n

    @property
    def m(self) -> int:
        return self.family.m


def make_params(n: int, gamma: Fraction, beta: Fraction, m: int) -> ReductionParams:
    """Validate and couple the reduction parameters.

    Requires 0 < beta < gamma <= 1, m >= 1, and (beta/gamma)*n integral
    (the gap statements quantify over exactly k-sized subgraphs, so a
    non-integer k is a hard error telling the caller to adjust n); k must
    be at least 2 for subgraph density to be defined.
    """
    beta = Fraction(beta)
    gamma = Fraction(gamma)
    if not (0 < beta < gamma <= 1):
        raise ParameterError(f"need 0 < beta < gamma <= 1, got beta={beta}, gamma={gamma}")
    if m < 1:
        raise ParameterError("block length m must be >= 1")
    if n < 1:
        raise ParameterError("n must be >= 1")
    ratio = beta / gamma
    k_frac = ratio * n
    if k_frac.denominator != 1:
        raise ParameterError(
            f"k = (beta/gamma)*n = {k_frac} is not an integer; "
            f"adjust n to a multiple of {ratio.denominator}"
        )
    k = int(k_frac)
    if k < 2:
        raise ParameterError(f"k = {k} < 2: subgraph density undefined, enlarge n")
    alpha = beta * beta / 8
    ell_yes = k * m
    ell_no = 2 * beta * m * n
    # gap sanity: the thresholds separate exactly when gamma < 1/2
    assert (ell_no < ell_yes) == (gamma < Fraction(1, 2))
    return ReductionParams(n, k, alpha, beta, gamma, m, ell_yes, ell_no)


def jiang_li(g: Graph) -> SymbolicInstance:
    """Vertex-alphabet string pair per vertex; deterministic in the labeling."""
    xs = []
    xps = []
    for i in range(1, g.n + 1):
        others = [v for v in range(1, g.n + 1) if v != i]
        xs.append(tuple(others + [i] + list(g.neighbors_above(i))))
        xps.append(tuple(list(g.neighbors_below(i)) + [i] + others))
    return SymbolicInstance(g.n, tuple(xs), tuple(xps), g)


def clique_to_witness(inst: SymbolicInstance, clique) -> tuple:
    """Clique vertices in increasing label order; verified as a common
    subsequence of all 2n strings before returning."""
    vs = sorted(set(int(v) for v in clique))
    for idx, u in enumerate(vs):
        if not (1 <= u <= inst.n):
            raise WitnessError(f"vertex {u} outside 1..{inst.n}")
        for v in vs[idx + 1:]:
            if not inst.source.has_edge(u, v):
                raise WitnessError(f"not a clique: missing edge ({u},{v})")
    witness = tuple(vs)
    if not is_common_subsequence(witness, inst.all_strings):
        raise AssertionError("clique witness failed subsequence verification")
    return witness


def witness_to_clique_check(inst: SymbolicInstance, s):
    """(True, None) iff every pair of distinct symbols in s is an edge,
    else (False, missing edge).  Exists as a falsification probe: any
    verified common subsequence is guaranteed to pass."""
    seq = [int(x) for x in s]
    if not is_common_subsequence(seq, inst.all_strings):
        raise ParameterError("input is not a common subsequence of the instance")
    vs = sorted(set(seq))
    for idx, u in enumerate(vs):
        for v in vs[idx + 1:]:
            if not inst.source.has_edge(u, v):
                return False, (u, v)
    return True, None


def expand_witness(family: StringFamily, symbols) -> tuple:
    """Substitute the full block S_v for every vertex symbol v."""
    out = []
    for v in symbols:
        out.extend(family.strings[int(v) - 1])
    return tuple(out)


def _substitute(family: StringFamily, symbolic_string) -> tuple:
    return expand_witness(family, symbolic_string)


def alphabet_reduce(
    inst: SymbolicInstance,
    family: StringFamily,
    params: Optional[ReductionParams] = None,
) -> BlockInstance:
    """Replace every vertex symbol v_j with block S_j in all 2n strings."""
    if family.n != inst.n:
        raise ParameterError(
            f"family has {family.n} blocks but instance needs {inst.n}"
        )
    if not family.certified:
        raise CertificationError("family is not certified; refusing to reduce")
    if params is not None:
        if params.n != inst.n:
            raise ParameterError("params.n does not match the instance")
        if family.alpha > params.alpha:
            raise CertificationError(
                f"family bound alpha={family.alpha} exceeds required {params.alpha}"
            )
    ys = tuple(_substitute(family, x) for x in inst.x_strings)
    yps = tuple(_substitute(family, x) for x in inst.x_prime_strings)
    layout = inst.x_strings + inst.x_prime_strings
    return BlockInstance(family, ys, yps, layout, params, inst)


def decode_layout(block: BlockInstance, string_index: int) -> tuple:
    """Recover the symbolic string from a block string's layout entry."""
    return block.block_layout[string_index]


# ---------------------------------------------------------------------------
# instance file format: header "mlcs <num_strings> <sigma> <m_block_or_1>",
# one string per line as space-separated integer symbols (X_1..X_n then
# X'_1..X'_n).  A companion JSON metadata file records params, layout, and
# provenance hashes.  Round trips are byte-exact.
# ---------------------------------------------------------------------------

def format_instance(strings, sigma: int, m_block: int) -> str:
    lines = [f"mlcs {len(strings)} {sigma} {m_block}"]
    lines.extend(" ".join(str(x) for x in s) for s in strings)
    return "\n".join(lines) + "\n"


def parse_instance(text: str):
    """Returns (strings, sigma, m_block)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("mlcs "):
        raise FormatError("instance file must start with an 'mlcs' header")
    parts = lines[0].split()
    if len(parts) != 4:
        raise FormatError(f"bad instance header {lines[0]!r}")
    try:
        num, sigma, m_block = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError as exc:
        raise FormatError(f"bad instance header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != num:
        raise FormatError(f"header promises {num} strings, file has {len(body)}")
    strings = tuple(tuple(int(x) for x in ln.split()) for ln in body)
    return strings, sigma, m_block


def write_instance(strings, sigma: int, m_block: int, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_instance(strings, sigma, m_block))


def read_instance(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_instance(fh.read())


def frac_str(f: Fraction) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def params_to_dict(params: Optional[ReductionParams]) -> Optional[dict]:
    if params is None:
        return None
    return {
        "n": params.n,
        "k": params.k,
        "alpha": frac_str(params.alpha),
        "beta": frac_str(params.beta),
        "gamma": frac_str(params.gamma),
        "m": params.m,
        "ell_yes": params.ell_yes,
        "ell_no": frac_str(params.ell_no),
    }


def params_from_dict(d: Optional[dict]) -> Optional[ReductionParams]:
    if d is None:
        return None
    return ReductionParams(
        n=d["n"],
        k=d["k"],
        alpha=parse_frac(d["alpha"]),
        beta=parse_frac(d["beta"]),
        gamma=parse_frac(d["gamma"]),
        m=d["m"],
        ell_yes=d["ell_yes"],
        ell_no=parse_frac(d["ell_no"]),
    )


def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def build_metadata(
    kind: str,
    params: Optional[ReductionParams],
    block_layout,
    graph_sha256: Optional[str],
    family_sha256: Optional[str],
    seed: Optional[int],
) -> dict:
    return {
        "format": "mlcs-meta",
        "kind": kind,
        "params": params_to_dict(params),
        "block_layout": [list(row) for row in block_layout] if block_layout else None,
        "provenance": {
            "graph_sha256": graph_sha256,
            "family_sha256": family_sha256,
            "seed": seed,
        },
    }
