"""Certificate files and the solver-independent end-to-end verifier.

A certificate packages, for one pair: the chosen ordering, the metric
coefficients, the pluriclosed contradiction data and the Chern report,
all as exact rational strings.  Serialization is canonical JSON (sorted
keys, lowest-terms "p/q" payloads), so identical inputs produce identical
bytes apart from the provenance timestamp.

Verification here re-derives every verdict from the raw payload using only
the root-system and catalog primitives; it shares no code path with the
solvers, so it stays an independent check of the same mathematics.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .pairs import InnerPair, pair_by_name
from .rootsys import RootSystemError, RootVector, SimpleSystem, zero_vector

SCHEMA_VERSION = 1
TOOL_NAME = "innerlie"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


@dataclass
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class AnalysisCertificate:
    schema_version: int
    pair_name: str
    family: str
    rank: int
    painted_node: int
    dim_g: int
    dim_k: int
    ordering_mode: str
    simples: tuple[RootVector, ...]
    metric: dict[RootVector, Fraction]
    balanced_verdict: bool
    pluriclosed: dict
    chern: dict
    provenance: dict


def _vec_to_json(v: RootVector) -> list[str]:
    return [str(c) for c in v.coords]


def _vec_from_json(data) -> RootVector:
    return RootVector([Fraction(c) for c in data])


def _coeffs_to_json(coeffs: dict[RootVector, Fraction]) -> list:
    return [{"root": _vec_to_json(root), "c": str(value)}
            for root, value in sorted(coeffs.items())]


def _coeffs_from_json(data) -> dict[RootVector, Fraction]:
    return {_vec_from_json(item["root"]): Fraction(item["c"]) for item in data}


def analyze_pair(pair_or_name, x=Fraction(1), y=Fraction(2)) -> AnalysisCertificate:
    """Run the full pipeline on one catalog pair and package the results."""
    from .balanced import solve_for_pair, verify_balanced
    from .chern import chern_report
    from .pluriclosed import build_certificate

    pair = pair_or_name if isinstance(pair_or_name, InnerPair) else pair_by_name(pair_or_name)
    metric = solve_for_pair(pair, x, y)
    ordering = metric.ordering
    balanced_ok = verify_balanced(metric, pair)
    pluri = build_certificate(ordering, pair)
    chern = chern_report(metric, ordering, pair)
    if not (balanced_ok and chern.scalar_curvature == 0 and chern.delta_nonzero):
        raise RootSystemError(f"{pair.name}: pipeline produced an inconsistent result")

    pluri_payload = {
        "branch": pluri.branch,
        "roots": {label: _vec_to_json(root) for label, root in sorted(pluri.roots.items())},
        "relations": [
            {"alpha": _vec_to_json(r.alpha), "beta": _vec_to_json(r.beta),
             "coeffs": _coeffs_to_json(r.coeffs)}
            for r in pluri.relations
        ],
        "combination": [str(c) for c in pluri.combination],
        "conclusion_root": _vec_to_json(pluri.conclusion_root),
        "conclusion_coeffs": _coeffs_to_json(pluri.conclusion_coeffs),
        "variable_signs": [
            {"root": _vec_to_json(root), "sign": sign}
            for root, sign in sorted(pluri.variable_signs.items())
        ],
    }
    chern_payload = {
        "delta": _vec_to_json(chern.delta),
        "scalar_curvature": str(chern.scalar_curvature),
        "delta_nonzero": chern.delta_nonzero,
        "kodaira_flag": chern.kodaira_flag,
    }
    return AnalysisCertificate(
        schema_version=SCHEMA_VERSION,
        pair_name=pair.name,
        family=pair.family,
        rank=pair.rank,
        painted_node=pair.painted_node,
        dim_g=pair.dim_g,
        dim_k=pair.dim_k,
        ordering_mode=ordering.mode,
        simples=ordering.system.simples,
        metric=dict(metric.g),
        balanced_verdict=balanced_ok,
        pluriclosed=pluri_payload,
        chern=chern_payload,
        provenance={
            "tool": TOOL_NAME,
            "version": __version__,
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        },
    )


def to_dict(cert: AnalysisCertificate) -> dict:
    return {
        "schema_version": cert.schema_version,
        "pair": {
            "name": cert.pair_name,
            "family": cert.family,
            "rank": cert.rank,
            "painted_node": cert.painted_node,
            "dim_g": cert.dim_g,
            "dim_k": cert.dim_k,
        },
        "ordering": {
            "mode": cert.ordering_mode,
            "simples": [_vec_to_json(s) for s in cert.simples],
        },
        "metric": _coeffs_to_json(cert.metric),
        "balanced_verdict": cert.balanced_verdict,
        "pluriclosed_certificate": cert.pluriclosed,
        "chern_report": cert.chern,
        "provenance": cert.provenance,
    }


def from_dict(data: dict) -> AnalysisCertificate:
    pair = data["pair"]
    return AnalysisCertificate(
        schema_version=data["schema_version"],
        pair_name=pair["name"],
        family=pair["family"],
        rank=pair["rank"],
        painted_node=pair["painted_node"],
        dim_g=pair["dim_g"],
        dim_k=pair["dim_k"],
        ordering_mode=data["ordering"]["mode"],
        simples=tuple(_vec_from_json(s) for s in data["ordering"]["simples"]),
        metric=_coeffs_from_json(data["metric"]),
        balanced_verdict=data["balanced_verdict"],
        pluriclosed=data["pluriclosed_certificate"],
        chern=data["chern_report"],
        provenance=data["provenance"],
    )


def serialize(cert: AnalysisCertificate) -> str:
    return json.dumps(to_dict(cert), sort_keys=True, indent=2) + "\n"


def parse(text: str) -> AnalysisCertificate:
    return from_dict(json.loads(text))


def save(cert: AnalysisCertificate, path: str) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(serialize(cert))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(path: str) -> AnalysisCertificate:
    with open(path) as handle:
        return parse(handle.read())


# ---------------------------------------------------------------------------
# Independent verification (root-system and catalog primitives only)
# ---------------------------------------------------------------------------

def _fail(reason: str) -> VerificationResult:
    return VerificationResult(False, reason)


def _verify_pluriclosed_payload(payload: dict, pair: InnerPair,
                                system: SimpleSystem) -> VerificationResult:
    rs = pair.system
    try:
        branch = payload["branch"]
        relations = payload["relations"]
        combination = [Fraction(c) for c in payload["combination"]]
        conclusion_root = _vec_from_json(payload["conclusion_root"])
        conclusion_coeffs = _coeffs_from_json(payload["conclusion_coeffs"])
        signs = {_vec_from_json(item["root"]): item["sign"]
                 for item in payload["variable_signs"]}
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        return _fail("malformed certificate")
    if (branch == "so_1_2n") != pair.is_so_1_2n:
        return _fail("branch mismatch")
    if len(relations) != len(combination):
        return _fail("malformed certificate")

    dim = rs.ambient_dim
    combined_matrix = [[Fraction(0)] * dim for _ in range(dim)]
    combined: dict[RootVector, Fraction] = {}
    for weight, item in zip(combination, relations):
        try:
            alpha = _vec_from_json(item["alpha"])
            beta = _vec_from_json(item["beta"])
            stored = _coeffs_from_json(item["coeffs"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            return _fail("malformed certificate")
        if not (rs.is_root(alpha) and rs.is_root(beta)):
            return _fail("relation roots invalid")
        if not (system.is_positive(alpha) and system.is_positive(beta)):
            return _fail("relation roots invalid")
        derived: dict[RootVector, Fraction] = {}

        def accumulate(root, value):
            derived[root] = derived.get(root, Fraction(0)) + value
            if derived[root] == 0:
                del derived[root]

        if rs.is_root(alpha + beta):
            n2 = rs.n_squared(alpha, beta)
            accumulate(alpha + beta, n2)
            accumulate(alpha, -n2)
            accumulate(beta, -n2)
        if rs.is_root(alpha - beta):
            n2 = rs.n_squared(alpha, -beta)
            sign = 1 if system.is_positive(alpha - beta) else -1
            accumulate(alpha - beta if sign > 0 else beta - alpha, n2)
            accumulate(beta, sign * n2)
            accumulate(alpha, -sign * n2)
        if derived != stored:
            return _fail("relation mismatch")
        for i in range(dim):
            for j in range(dim):
                combined_matrix[i][j] += weight * (
                    alpha.coords[i] * beta.coords[j] + alpha.coords[j] * beta.coords[i])
        for root, value in stored.items():
            combined[root] = combined.get(root, Fraction(0)) + weight * value
            if combined[root] == 0:
                del combined[root]

    if not rs.is_root(conclusion_root):
        return _fail("relation roots invalid")
    for i in range(dim):
        for j in range(dim):
            target = 2 * conclusion_root.coords[i] * conclusion_root.coords[j]
            if combined_matrix[i][j] != target:
                return _fail("elimination failed")
    if combined != conclusion_coeffs:
        return _fail("conclusion mismatch")
    if not combined:
        return _fail("sign pattern violated")
    for root, sign in signs.items():
        if not rs.is_root(root):
            return _fail("relation roots invalid")
        if sign != (-1 if pair.grading.is_compact(root) else 1):
            return _fail("sign pattern violated")
    for root, value in combined.items():
        true_sign = -1 if pair.grading.is_compact(root) else 1
        if signs.get(root) != true_sign:
            return _fail("sign pattern violated")
        if (value > 0) != (true_sign > 0):
            return _fail("sign pattern violated")
    return VerificationResult(True)


def verify_data(data: dict) -> VerificationResult:
    """Recompute every verdict of a parsed certificate from its raw payload."""
    if not isinstance(data, dict) or "schema_version" not in data:
        return _fail("schema mismatch")
    if data["schema_version"] != SCHEMA_VERSION:
        return _fail("schema mismatch")
    try:
        cert = from_dict(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        return _fail("malformed certificate")

    try:
        pair = pair_by_name(cert.pair_name)
    except RootSystemError:
        return _fail("pair unknown")
    if (pair.rank, pair.painted_node, pair.dim_g, pair.dim_k, pair.family) != (
            cert.rank, cert.painted_node, cert.dim_g, cert.dim_k, cert.family):
        return _fail("pair mismatch")

    try:
        system = SimpleSystem(cert.simples)
        pair.system.validate_base(system)
    except RootSystemError:
        return _fail("ordering invalid")
    if cert.ordering_mode not in ("partner_property", "so_1_2n_special"):
        return _fail("ordering invalid")
    if (cert.ordering_mode == "so_1_2n_special") != pair.is_so_1_2n:
        return _fail("ordering invalid")

    positives = pair.system.positives(system)
    if set(cert.metric) != set(positives):
        return _fail("metric domain mismatch")
    if any(value <= 0 for value in cert.metric.values()):
        return _fail("positivity violated")

    compact_sum = zero_vector(pair.system.ambient_dim)
    noncompact_sum = zero_vector(pair.system.ambient_dim)
    for root in positives:
        weighted = cert.metric[root] * root
        if pair.grading.is_compact(root):
            compact_sum = compact_sum + weighted
        else:
            noncompact_sum = noncompact_sum + weighted
    if compact_sum != noncompact_sum or not cert.balanced_verdict:
        return _fail("balanced identity failed")

    result = _verify_pluriclosed_payload(cert.pluriclosed, pair, system)
    if not result.ok:
        return result

    try:
        delta_stored = _vec_from_json(cert.chern["delta"])
        scalar_stored = Fraction(cert.chern["scalar_curvature"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        return _fail("malformed certificate")
    delta = zero_vector(pair.system.ambient_dim)
    for root in positives:
        delta = delta + root
    if delta != delta_stored:
        return _fail("delta mismatch")
    if delta.is_zero() or not cert.chern.get("delta_nonzero", False):
        return _fail("delta zero")
    scalar = 2 * (noncompact_sum - compact_sum).dot(delta)
    if scalar != 0 or scalar_stored != scalar:
        return _fail("chern scalar nonzero")
    if cert.chern.get("kodaira_flag") is not True:
        return _fail("flag mismatch")
    return VerificationResult(True)


def verify_file(path: str) -> VerificationResult:
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError:
        return _fail("parse error")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return _fail("parse error")
    return verify_data(data)
