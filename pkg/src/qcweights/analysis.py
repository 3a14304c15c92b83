"""End-to-end analysis of one code: construction, enumeration, orbits, bounds.

The result is a plain JSON-serialisable dict so the command line can print
it directly and tests can round-trip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .bounds import (
    BoundReport,
    ConstituentArith,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
    shift_scalar_orbit_count,
)
from .code import DEFAULT_LIMIT, QccSpec, QuasiCyclicCode, build_code, distribution_from_words, weights_of
from .errors import GroupNotApplicableError, InternalError, InvalidInputError
from .group import CodewordSet, GroupKind, burnside_count, group_acts, orbit_partition, tightness_check
from .ring import generator_poly, minimal_poly, primitive_idempotent

ALL_GROUPS = (GroupKind.SHIFT, GroupKind.SHIFT_SCALAR, GroupKind.FULL)


@dataclass
class AnalysisConfig:
    max_enum: int = DEFAULT_LIMIT
    groups: tuple[GroupKind, ...] | None = None  # None: every applicable group
    omega_index: int = 1
    enumerate: bool = True

    def __post_init__(self):
        if self.max_enum < 1:
            raise InvalidInputError("max-enum must be at least 1")
        if self.omega_index < 1:
            raise InvalidInputError("omega-index must be at least 1")
        if self.groups is not None and not self.groups:
            raise InvalidInputError("at least one group must be requested")


def parse_groups(text: str) -> tuple[GroupKind, ...]:
    out = []
    for name in text.split(","):
        name = name.strip()
        try:
            kind = GroupKind(name)
        except ValueError:
            raise InvalidInputError(
                f"unknown group {name!r} (choose from {', '.join(g.value for g in GroupKind)})"
            ) from None
        if kind not in out:
            out.append(kind)
    if not out:
        raise InvalidInputError("at least one group must be requested")
    return tuple(out)


def constituent_ariths(code: QuasiCyclicCode) -> list[ConstituentArith]:
    """(i, k, K) per constituent with the user's representative; K = 0 blocks dropped."""
    return [
        ConstituentArith(c.coset_rep, c.k, c.dimension)
        for c in code.constituents
        if not c.degenerate
    ]


def full_qualifies(code: QuasiCyclicCode) -> bool:
    live = [c for c in code.constituents if not c.degenerate]
    return bool(live) and all(c.qualifies_one_generator for c in live)


def formula_value(kind: GroupKind, code: QuasiCyclicCode) -> int:
    ariths = constituent_ariths(code)
    if not ariths:
        return 0
    if kind is GroupKind.SHIFT:
        return bound_theorem1(ariths, code.m, code.q)
    if kind is GroupKind.SHIFT_SCALAR:
        return bound_theorem2(ariths, code.m, code.q)
    return bound_theorem3(ariths, code.m, code.q)


def _describe_constituents(code: QuasiCyclicCode) -> list[dict[str, Any]]:
    out = []
    for c in code.constituents:
        out.append({
            "coset": c.coset_rep,
            "members": sorted(c.coset.members),
            "k": c.k,
            "rank": c.rank,
            "K": c.dimension,
            "h": list(minimal_poly(c.coset, code.ctx)),
            "g": list(generator_poly(c.coset, code.ctx).coeffs),
            "idempotent": list(primitive_idempotent(c.coset, code.ctx).coeffs),
            "one_generator_01": c.qualifies_one_generator,
        })
    return out


def _select_groups(code: QuasiCyclicCode, cfg: AnalysisConfig, report: BoundReport) -> list[GroupKind]:
    if cfg.groups is not None:
        for kind in cfg.groups:
            if not group_acts(code, kind):
                raise GroupNotApplicableError(f"group <{kind.value}> does not preserve this code")
        return list(cfg.groups)
    chosen = [GroupKind.SHIFT, GroupKind.SHIFT_SCALAR]
    if not full_qualifies(code):
        report.notes.append("full group skipped: not every constituent is a one-generator {0,1} block")
    elif not group_acts(code, GroupKind.FULL):
        report.notes.append("full group skipped: the code is not closed under x -> x^q")
    else:
        chosen.append(GroupKind.FULL)
    return chosen


def analyze_spec(spec: QccSpec, cfg: AnalysisConfig | None = None, warnings: list[str] | None = None) -> dict[str, Any]:
    cfg = cfg or AnalysisConfig()
    code = build_code(spec, cfg.omega_index)
    report = BoundReport()
    notes = list(warnings or [])
    notes += [w for w in code.warnings if w not in notes]
    groups = _select_groups(code, cfg, report)

    for kind in groups:
        if kind is GroupKind.FULL and not full_qualifies(code):
            report.formulas[kind.value] = None
            report.notes.append("full-group formula not applicable: constituents do not all qualify")
        else:
            report.formulas[kind.value] = formula_value(kind, code)

    exact_counts: dict[str, int] = {}
    if GroupKind.SHIFT_SCALAR in groups:
        ariths = constituent_ariths(code)
        exact_counts[GroupKind.SHIFT_SCALAR.value] = shift_scalar_orbit_count(ariths, code.m, code.q) if ariths else 0

    distribution: dict[int, int] | None = None
    if cfg.enumerate:
        words = CodewordSet(code, cfg.max_enum)
        weights = weights_of(words.words)
        wd = distribution_from_words(words.words)
        if wd.total != code.size or wd.counts.get(0) != 1:
            raise InternalError("enumeration is inconsistent with the code dimension")
        distribution = wd.counts
        report.s = len(wd.nonzero_weights)
        for kind in groups:
            part = orbit_partition(words, kind)
            burn = burnside_count(words, kind)
            if part.count != burn:
                raise InternalError(f"<{kind.value}>: partition gives {part.count}, Burnside gives {burn}")
            if report.s > burn:
                raise InternalError(f"s = {report.s} exceeds the <{kind.value}> orbit count {burn}")
            report.orbit_counts[kind.value] = burn
            report.tightness[kind.value] = report.s == burn
            report.tightness[f"{kind.value}_weight_classes"] = tightness_check(weights, part)
            formula = report.formulas.get(kind.value)
            if formula is None or formula == burn:
                continue
            if kind is GroupKind.SHIFT:
                raise InternalError(f"<shift>: formula {formula} != orbit count {burn}")
            if kind is GroupKind.SHIFT_SCALAR:
                if exact_counts.get(kind.value) != burn:
                    raise InternalError(f"<shift-scalar>: stabilizer count {exact_counts.get(kind.value)} != {burn}")
                report.notes.append(
                    f"shift-scalar formula {formula} differs from the orbit count {burn} "
                    "(constituent scalar conditions are not independent)"
                )
            elif formula > burn:
                report.notes.append(f"full-group formula {formula} exceeds the orbit count {burn}")
            else:
                report.notes.append(f"full-group formula {formula} is below the orbit count {burn}")

    full_gap = None
    if GroupKind.FULL.value in report.orbit_counts and report.formulas.get(GroupKind.FULL.value) is not None:
        full_gap = report.formulas[GroupKind.FULL.value] > report.orbit_counts[GroupKind.FULL.value]

    return {
        "parameters": {
            "q": spec.q, "m": spec.m, "l": spec.l, "n": spec.n,
            "m_prime": code.ctx.m_prime, "dimension": code.dimension,
            "size": code.size, "omega_index": cfg.omega_index,
        },
        "cosets": [
            {"rep": c.rep, "members": sorted(c.members), "size": c.size} for c in code.ctx.cosets
        ],
        "constituents": _describe_constituents(code),
        "bounds": dict(report.formulas),
        "exact_counts": exact_counts,
        "orbit_counts": dict(report.orbit_counts),
        "weight_distribution": (
            None if distribution is None
            else {str(w): distribution[w] for w in sorted(distribution)}
        ),
        "s": report.s,
        "tightness": dict(report.tightness),
        "full_formula_exceeds_count": full_gap,
        "warnings": notes + report.notes,
    }


def format_report(report: dict[str, Any]) -> str:
    """Human-readable summary of an analysis report."""
    p = report["parameters"]
    lines = [
        f"code over F_{p['q']}: m={p['m']} l={p['l']} n={p['n']} dimension K={p['dimension']} "
        f"({p['size']} codewords), m'={p['m_prime']}",
    ]
    for c in report["constituents"]:
        lines.append(
            f"  constituent coset={c['coset']} {{{','.join(map(str, c['members']))}}}: "
            f"k={c['k']} rank={c['rank']} K={c['K']}"
        )
    wd = report["weight_distribution"]
    if wd is not None:
        terms = [f"{c}" if w == "0" else f"{'' if c == 1 else c}x^{w}" for w, c in wd.items()]
        lines.append(f"weight distribution: {' + '.join(terms)}")
        lines.append(f"s(C) = {report['s']}")
    for kind, value in report["bounds"].items():
        text = f"  <{kind}>: formula {'n/a' if value is None else value}"
        if kind in report["orbit_counts"]:
            tight = "tight" if report["tightness"][kind] else "not tight"
            text += f", orbits {report['orbit_counts'][kind]} ({tight})"
        lines.append(text)
    for w in report["warnings"]:
        lines.append(f"note: {w}")
    return "\n".join(lines)
