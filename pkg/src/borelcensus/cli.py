"""Command-line front end over every module, with JSON and plain output.

Every invocation builds one envelope {command, inputs, result, errata,
version}; --json prints it as a single JSON object (big counts as decimal
strings), --output writes it to a file, and plain mode renders a human
summary.  Exit codes: 0 success, 1 domain error, 2 usage error, 3
indeterminate numerical result.
"""

from __future__ import annotations

import json
import sys

from . import __version__
from .errors import DomainError, NumericalError
from .flags import (
    SignRep,
    borel_classification,
    class_census,
    equivalent,
    nodal_subspaces,
    orbit_length,
    weyl,
)
from .invverify import verify_pair
from .lieverify import DEFAULT_TOL, closure, block_algebra, transitive_on
from ._accel import BACKEND
from .pairs import (
    Agreement,
    decompose,
    first_window_with_involution,
    generated_group,
    has_common_subpartition,
    is_transitive_pair,
)
from .partitions import Partition, enumerate_partitions, partition_counts
from .published import PUBLISHED_P_LIST, p_list_errata, table_errata
from .special import family, solutions_count

USAGE = """usage: borelcensus [--json] [--output FILE] COMMAND [ARGS]

commands:
  count N                             the six partition counts of N
  list N [--min-part K] [--distinct]  enumerate partitions of N
  weyl PARTS..                        Weyl descriptor of a partition
  equiv PARTS.. -- PARTS..            flag equivalence of two partitions
  orbit PARTS..                       orbit length of a partition
  census N                            flag-class census of N
  special N                           the double-partition family at N
  solutions N                         number of solution series at N
  pair PARTS.. -- PARTS..             decomposition and generated group
  verify-lie PARTS.. -- PARTS.. [--tol T] [--matrices]   numerical structure check
  verify-inv PARTS.. -- PARTS.. [--degree D]   fixed-space independence check
  nodal PARTS.. --delta BITS          fixed subspaces of the signed swaps
  classify N                          groups transitive on the sphere of R^N
  table [--max N]                     census table with errata markers
  plist [--max N]                     the published P list, checked
"""


class UsageError(Exception):
    pass


def _pop_flag(tokens, name):
    if name in tokens:
        tokens.remove(name)
        return True
    return False


def _pop_value(tokens, name, cast, default):
    if name not in tokens:
        return default
    i = tokens.index(name)
    if i + 1 >= len(tokens):
        raise UsageError(f"{name} needs a value")
    raw = tokens[i + 1]
    del tokens[i : i + 2]
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value for {name}: {raw!r}") from None


def _reject_leftover_flags(tokens):
    for t in tokens:
        if t.startswith("-") and t != "--":
            raise UsageError(f"unknown option {t!r}")


def _int(tok, what="argument"):
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {tok!r}") from None


def _one_int(tokens, what="N"):
    _reject_leftover_flags(tokens)
    if len(tokens) != 1:
        raise UsageError(f"expected exactly one {what}")
    return _int(tokens[0], what)


def _partition(tokens):
    _reject_leftover_flags(tokens)
    if not tokens:
        raise UsageError("expected partition parts")
    return Partition(tuple(_int(t, "part") for t in tokens))


def _two_partitions(tokens):
    if "--" not in tokens:
        raise UsageError("expected two partitions separated by --")
    i = tokens.index("--")
    return _partition(tokens[:i]), _partition(tokens[i + 1 :])


def _errata_for_n(n):
    out = [e for e in table_errata() if e.n == n]
    if n in PUBLISHED_P_LIST:
        out.extend(e for e in p_list_errata() if e.n == n)
    return out


def _counts_payload(c):
    return {
        "n": c.n,
        "p": str(c.p),
        "q": str(c.q),
        "r": str(c.r),
        "p_ge2": str(c.p_ge2),
        "q_ge2": str(c.q_ge2),
        "r_ge2": str(c.r_ge2),
    }


def _cmd_count(tokens):
    n = _one_int(tokens)
    c = partition_counts(n)
    plain = [
        f"P({n}) = {c.p}",
        f"Q({n}) = {c.q}",
        f"R({n}) = {c.r}",
        f"P({n};1) = {c.p_ge2}",
        f"Q({n};1) = {c.q_ge2}",
        f"R({n};1) = {c.r_ge2}",
    ]
    return {"n": n}, _counts_payload(c), _errata_for_n(n), plain


def _cmd_list(tokens):
    min_part = _pop_value(tokens, "--min-part", int, 1)
    distinct = _pop_flag(tokens, "--distinct")
    n = _one_int(tokens)
    parts = enumerate_partitions(n, min_part, distinct)
    result = {
        "n": n,
        "min_part": min_part,
        "distinct": distinct,
        "count": str(len(parts)),
        "partitions": [list(p.parts) for p in parts],
    }
    plain = [" ".join(str(v) for v in p.parts) for p in parts]
    return {"n": n, "min_part": min_part, "distinct": distinct}, result, [], plain


def _cmd_weyl(tokens):
    p = _partition(tokens)
    w = weyl(p)
    result = {
        "partition": list(p.parts),
        "factors": [[v, m] for v, m in w.factors],
        "order": str(w.order),
        "nontrivial": w.nontrivial,
        "involutions": [
            {"block_a": i.block_a, "block_b": i.block_b, "block_size": i.block_size}
            for i in w.involutions
        ],
    }
    plain = [
        f"partition {p}",
        "factors " + " ".join(f"S({m})@{v}" for v, m in w.factors),
        f"order {w.order}",
        f"nontrivial {w.nontrivial}",
    ]
    return {"partition": list(p.parts)}, result, [], plain


def _cmd_equiv(tokens):
    p1, p2 = _two_partitions(tokens)
    eq = equivalent(p1, p2)
    inputs = {"left": list(p1.parts), "right": list(p2.parts)}
    result = dict(inputs, equivalent=eq)
    return inputs, result, [], ["equivalent" if eq else "not equivalent"]


def _cmd_orbit(tokens):
    p = _partition(tokens)
    length = orbit_length(p)
    return (
        {"partition": list(p.parts)},
        {"partition": list(p.parts), "orbit_length": str(length)},
        [],
        [str(length)],
    )


def _cmd_census(tokens):
    n = _one_int(tokens)
    c = class_census(n)
    result = {
        "n": n,
        "total": str(c.total),
        "trivial_weyl": str(c.trivial_weyl),
        "nontrivial_weyl": str(c.nontrivial_weyl),
        "total_ge2": str(c.total_ge2),
        "trivial_weyl_ge2": str(c.trivial_weyl_ge2),
        "nontrivial_weyl_ge2": str(c.nontrivial_weyl_ge2),
    }
    plain = [
        f"flag classes of {n}: {c.total} total, {c.trivial_weyl} trivial Weyl, "
        f"{c.nontrivial_weyl} nontrivial",
        f"with parts >= 2: {c.total_ge2} total, {c.trivial_weyl_ge2} trivial Weyl, "
        f"{c.nontrivial_weyl_ge2} nontrivial",
    ]
    return {"n": n}, result, _errata_for_n(n), plain


def _cmd_special(tokens):
    n = _one_int(tokens)
    fam = family(n)
    result = {
        "n": n,
        "case": fam.case,
        "m": fam.m,
        "count": str(len(fam.members)),
        "members": [list(p.parts) for p in fam.members],
    }
    plain = [f"case {fam.case}, base M = {fam.m}, {len(fam.members)} members:"]
    plain += ["  " + str(p) for p in fam.members]
    return {"n": n}, result, [], plain


def _cmd_solutions(tokens):
    n = _one_int(tokens)
    s = solutions_count(n)
    return {"n": n}, {"n": n, "count": str(s)}, [], [str(s)]


def _segment_payload(seg):
    if isinstance(seg, Agreement):
        return {"type": "agreement", "start": seg.start, "part": seg.part}
    return {
        "type": "window",
        "start": seg.start,
        "size": seg.size,
        "h_parts": list(seg.h_parts),
        "k_parts": list(seg.k_parts),
    }


def _cmd_pair(tokens):
    p1, p2 = _two_partitions(tokens)
    dec = decompose(p1, p2)
    group = generated_group(p1, p2)
    transitive = is_transitive_pair(p1, p2)
    common = has_common_subpartition(p1, p2)
    plan = first_window_with_involution(p1, p2) if p1 != p2 else None
    inputs = {"left": list(p1.parts), "right": list(p2.parts)}
    result = {
        "left": inputs["left"],
        "right": inputs["right"],
        "segments": [_segment_payload(s) for s in dec.segments],
        "factors": [[size, origin] for size, origin in group.factors],
        "lie_dimension": group.lie_dimension,
        "transitive": transitive,
        "common_subpartition": common,
        "window_plan": None
        if plan is None
        else {
            "window_start": plan.window.start,
            "window_size": plan.window.size,
            "side": plan.side,
            "block_a": plan.block_a,
            "block_b": plan.block_b,
            "block_size": plan.block_size,
        },
    }
    plain = [f"{p1} vs {p2}"]
    for seg in dec.segments:
        if isinstance(seg, Agreement):
            plain.append(f"  agreement at {seg.start}: part {seg.part}")
        else:
            plain.append(
                f"  window at {seg.start} size {seg.size}: "
                f"{list(seg.h_parts)} vs {list(seg.k_parts)}"
            )
    plain.append(
        "generated group factors "
        + " x ".join(f"O({size})[{origin}]" for size, origin in group.factors)
    )
    plain.append(f"transitive on sphere: {transitive}")
    if plan is not None:
        plain.append(
            f"window swap: side {plan.side} blocks {plan.block_a},{plan.block_b} "
            f"(size {plan.block_size})"
        )
    return inputs, result, [], plain


def _cmd_verify_lie(tokens):
    tol = _pop_value(tokens, "--tol", float, DEFAULT_TOL)
    with_matrices = _pop_flag(tokens, "--matrices")
    p1, p2 = _two_partitions(tokens)
    group = generated_group(p1, p2)
    c = closure(block_algebra(p1), block_algebra(p2), tol)
    full = transitive_on(c, (0, p1.n))
    predicted = is_transitive_pair(p1, p2)
    windows = [
        {
            "start": w.start,
            "size": w.size,
            "transitive": transitive_on(c, (w.start, w.start + w.size)),
        }
        for w in decompose(p1, p2).windows
    ]
    inputs = {"left": list(p1.parts), "right": list(p2.parts), "tol": tol}
    result = {
        "backend": BACKEND,
        "closure_dimension": c.dimension,
        "predicted_lie_dimension": group.lie_dimension,
        "dimensions_match": c.dimension == group.lie_dimension,
        "transitive_numeric": full,
        "transitive_predicted": predicted,
        "transitivity_match": full == predicted,
        "iterations": c.iterations,
        "windows": windows,
    }
    if with_matrices:
        result["basis"] = [x.tolist() for x in c.basis.elements]
    plain = [
        f"closure dimension {c.dimension} (predicted {group.lie_dimension}, "
        f"match={result['dimensions_match']})",
        f"transitive on full sphere: numeric {full}, predicted {predicted}",
    ]
    plain += [
        f"window [{w['start']}, {w['start'] + w['size']}): transitive {w['transitive']}"
        for w in windows
    ]
    return inputs, result, [], plain


def _cmd_verify_inv(tokens):
    degree = _pop_value(tokens, "--degree", int, 6)
    p1, p2 = _two_partitions(tokens)
    report = verify_pair(p1, p2, degree)
    inputs = {"left": list(p1.parts), "right": list(p2.parts), "degree": degree}
    result = {
        "degree": report.degree,
        "window_start": report.window_start,
        "window_size": report.window_size,
        "carrier_side": report.carrier_side,
        "swaps": [list(s) if s is not None else None for s in report.swaps],
        "dims": list(report.dims),
        "intersection": report.intersection,
        "passed": report.passed,
    }
    plain = [
        f"window [{report.window_start}, {report.window_start + report.window_size}) "
        f"carried by side {report.carrier_side}",
        f"space dimensions {report.dims[0]} and {report.dims[1]}",
        f"intersection dimension {report.intersection}: "
        + ("PASS" if report.passed else "FAIL (counterexample)"),
    ]
    return inputs, result, [], plain


def _cmd_nodal(tokens):
    bits = _pop_value(tokens, "--delta", str, None)
    if bits is None:
        raise UsageError("nodal needs --delta BITS")
    if not bits or any(b not in "01" for b in bits):
        raise UsageError(f"--delta must be a nonempty string of 0/1, got {bits!r}")
    p = _partition(tokens)
    rho = SignRep(tuple(int(b) for b in bits))
    specs = nodal_subspaces(p, rho)
    inputs = {"partition": list(p.parts), "deltas": [int(b) for b in bits]}
    result = {
        "partition": inputs["partition"],
        "deltas": inputs["deltas"],
        "subspaces": [
            {"block_a": s.block_a, "block_b": s.block_b, "codimension": s.codimension}
            for s in specs
        ],
    }
    plain = [
        f"swap blocks {s.block_a},{s.block_b}: fixed subspace of codimension {s.codimension}"
        for s in specs
    ] or ["no signed swaps (all deltas are 0)"]
    return inputs, result, [], plain


def _cmd_classify(tokens):
    n = _one_int(tokens)
    entries = borel_classification(n)
    result = {"n": n, "pairs": [[g, h] for g, h in entries]}
    plain = [f"({g}, {h})" for g, h in entries]
    return {"n": n}, result, [], plain


def _cmd_table(tokens):
    max_n = _pop_value(tokens, "--max", int, 10)
    _reject_leftover_flags(tokens)
    if tokens:
        raise UsageError("table takes no positional arguments")
    if not 1 <= max_n <= 1000:
        raise DomainError(f"table needs 1 <= max <= 1000, got {max_n}")
    rows = [partition_counts(n) for n in range(1, max_n + 1)]
    errata = table_errata(max_n)
    flagged = {e.n for e in errata}
    result = {"max": max_n, "rows": [_counts_payload(c) for c in rows]}
    header = f"{'N':>4} {'P':>10} {'Q':>8} {'R':>10} {'P(;1)':>8} {'Q(;1)':>8} {'R(;1)':>8}"
    plain = [header]
    for c in rows:
        mark = "  *" if c.n in flagged else ""
        plain.append(
            f"{c.n:>4} {c.p:>10} {c.q:>8} {c.r:>10} {c.p_ge2:>8} {c.q_ge2:>8} "
            f"{c.r_ge2:>8}{mark}"
        )
    plain += ["* " + e.describe() for e in errata]
    return {"max": max_n}, result, errata, plain


def _cmd_plist(tokens):
    max_n = _pop_value(tokens, "--max", int, 49)
    _reject_leftover_flags(tokens)
    if tokens:
        raise UsageError("plist takes no positional arguments")
    if not 1 <= max_n <= 49:
        raise DomainError(f"plist covers 1 <= max <= 49, got {max_n}")
    values = [[n, str(partition_counts(n).p)] for n in range(1, max_n + 1)]
    errata = p_list_errata(max_n)
    result = {"max": max_n, "values": values}
    plain = [f"P({n}) = {v}" for n, v in values]
    plain += ["* " + e.describe() for e in errata]
    return {"max": max_n}, result, errata, plain


_COMMANDS = {
    "count": _cmd_count,
    "list": _cmd_list,
    "weyl": _cmd_weyl,
    "equiv": _cmd_equiv,
    "orbit": _cmd_orbit,
    "census": _cmd_census,
    "special": _cmd_special,
    "solutions": _cmd_solutions,
    "pair": _cmd_pair,
    "verify-lie": _cmd_verify_lie,
    "verify-inv": _cmd_verify_inv,
    "nodal": _cmd_nodal,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "plist": _cmd_plist,
}


def run(argv, stdout=None, stderr=None) -> int:
    """Execute one invocation; returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        tokens = list(argv)
        json_mode = _pop_flag(tokens, "--json")
        output = _pop_value(tokens, "--output", str, None)
        if not tokens:
            raise UsageError("missing subcommand")
        command = tokens.pop(0)
        if command in ("help", "-h", "--help"):
            print(USAGE, file=out)
            return 0
        handler = _COMMANDS.get(command)
        if handler is None:
            raise UsageError(f"unknown subcommand {command!r}")
        inputs, result, errata, plain = handler(tokens)
        envelope = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "errata": [
                {"n": e.n, "column": e.column, "printed": e.printed, "computed": e.computed}
                for e in errata
            ],
            "version": __version__,
        }
        text = json.dumps(envelope, sort_keys=True, separators=(",", ":"))
        if output:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        if json_mode:
            print(text, file=out)
        else:
            for line in plain:
                print(line, file=out)
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        print(USAGE, file=err)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except NumericalError as exc:
        print(f"numerical: {exc}", file=err)
        return 3


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
