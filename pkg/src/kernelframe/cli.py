"""Command-line surface for the library.

A parsed invocation becomes a JobSpec; ``run`` validates it against the
subcommand's parameter schema, executes, and returns an exit status plus a
report document. Reports carry a header with the library version and a
full parameter echo, and JSON output is byte-identical across repeated
runs with the same inputs (randomized commands take an explicit seed).

Exit codes: 0 success, 2 validation or input error (machine-readable
error JSON on stderr), 1 numerical failure or a failing reproduction row.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, frames, modelspace, repro, rkhs, serialize, toeplitz
from .blaschke import (
    DiskSequence,
    FiniteBlaschkeProduct,
    eval_product,
    perturbation_transfer,
    sequence_diagnostics,
)
from .errors import (
    DomainError,
    KernelFrameError,
    SerializationError,
    ValidationError,
)

# Parameter schemas, keyed by (command, action). Values are JSON types as
# the user supplies them; unknown keys are rejected before any numerics.
SCHEMAS = {
    ("kernel", "eval"): {
        "required": {"kind": "string", "y": "[re,im] or number", "z": "[re,im] or number"},
        "optional": {
            "blaschke": '{"zeros": [[re,im],...], "front": [re,im]}',
            "points": "[[re,im],...]",
            "trunc": "int",
            "N": "int (series terms)",
            "R": "number (rate)",
        },
    },
    ("kernel", "psd"): {
        "required": {"kind": "string", "sample": "[point,...]"},
        "optional": {
            "blaschke": '{"zeros": [[re,im],...], "front": [re,im]}',
            "points": "[[re,im],...]",
            "trunc": "int",
            "N": "int (series terms)",
            "R": "number (rate)",
        },
    },
    ("frame", "analyze"): {"required": {}, "optional": {}},
    ("frame", "dual"): {"required": {}, "optional": {}},
    ("frame", "gramian"): {"required": {}, "optional": {}},
    ("blaschke", "eval"): {
        "required": {"blaschke": "dict", "z": "[re,im]"},
        "optional": {"derivative": "bool"},
    },
    ("blaschke", "diag"): {
        "required": {"points": "[[re,im],...]"},
        "optional": {"theta": "dict (defaults to the product with those zeros)", "label": "string"},
    },
    ("blaschke", "perturb"): {
        "required": {"lam": "[[re,im],...]", "mu": "[[re,im],...]", "eps": "number"},
        "optional": {},
    },
    ("clark", ""): {
        "required": {"blaschke": "dict"},
        "optional": {"zeta": "[re,im], default [1,0]", "trunc": "int"},
    },
    ("toeplitz", "build"): {
        "required": {"symbol": '{"k": [re,im], ...}', "n": "int"},
        "optional": {},
    },
    ("toeplitz", "hilbert"): {
        "required": {"n": "int or [int,...]"},
        "optional": {},
    },
    ("toeplitz", "compress"): {
        "required": {"blaschke": "dict", "symbol": "dict"},
        "optional": {"trunc": "int"},
    },
    ("toeplitz", "frame-image"): {
        "required": {"symbol": "dict"},
        "optional": {},
    },
    ("toeplitz", "clark-condition"): {
        "required": {"blaschke": "dict", "symbol": "dict (analytic)"},
        "optional": {"zeta": "[re,im], default [1,0]", "trunc": "int"},
    },
    ("repro", ""): {
        "required": {},
        "optional": {"which": "|".join(("all",) + repro.SECTIONS), "seed": "int"},
    },
}

INPUT_COMMANDS = {
    ("frame", "analyze"),
    ("frame", "dual"),
    ("frame", "gramian"),
    ("toeplitz", "frame-image"),
}


@dataclass(frozen=True)
class JobSpec:
    command: str
    action: str = ""
    params: dict = field(default_factory=dict)
    input_path: str = None
    output: str = "-"
    fmt: str = "json"

    def validate(self):
        key = (self.command, self.action)
        if key not in SCHEMAS:
            raise ValidationError("unknown command %r" % (" ".join(k for k in key if k),))
        schema = SCHEMAS[key]
        allowed = set(schema["required"]) | set(schema["optional"])
        unknown = sorted(set(self.params) - allowed)
        if unknown:
            raise ValidationError("unknown parameter keys: %s" % ", ".join(unknown))
        missing = sorted(set(schema["required"]) - set(self.params))
        if missing:
            raise ValidationError("missing required parameters: %s" % ", ".join(missing))
        if self.fmt not in ("json", "csv", "table"):
            raise ValidationError("format must be json, csv, or table")
        if key in INPUT_COMMANDS and not self.input_path:
            raise ValidationError("this command requires --input")


def schema_text(command, action):
    """Human-readable parameter schema, shown in each subcommand's --help."""
    schema = SCHEMAS[(command, action)]
    lines = ["Parameter schema (JSON values):"]
    for name, typ in schema["required"].items():
        lines.append("  %s: %s (required)" % (name, typ))
    for name, typ in schema["optional"].items():
        lines.append("  %s: %s" % (name, typ))
    if (command, action) in INPUT_COMMANDS:
        lines.append("  --input: vector family file, .json or .csv")
    if len(lines) == 1:
        lines.append("  (no parameters)")
    lines.append("Complex numbers are always [re, im] pairs.")
    return "\n".join(lines)


def _json_value(text, flag):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("%s is not valid JSON: %s" % (flag, exc))


def _as_complex(value, name):
    try:
        return serialize.pair_to_complex(value)
    except (SerializationError, TypeError):
        raise ValidationError("%s must be a number or an [re, im] pair" % name)


def _as_real(value, name):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise ValidationError("%s must be a real number" % name)


def _as_int(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("%s must be an integer" % name)
    return value


def _blaschke(params, key="blaschke"):
    data = params[key]
    if not isinstance(data, dict):
        raise ValidationError("%s must be a JSON object" % key)
    return serialize.blaschke_from_dict(data)


def _symbol(params, key="symbol"):
    data = params[key]
    if not isinstance(data, dict):
        raise ValidationError("%s must be a JSON object" % key)
    return serialize.symbol_from_dict(data)


def _space(params):
    B = _blaschke(params)
    trunc = params.get("trunc")
    if trunc is not None:
        trunc = _as_int(trunc, "trunc")
    return modelspace.tm_basis(B, trunc)


def _point_list(value, name):
    if not isinstance(value, list) or not value:
        raise ValidationError("%s must be a nonempty list of points" % name)
    return [_as_complex(p, name) for p in value]


def load_family(path):
    """Vector family from a .json or .csv file, by extension."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError("cannot read %s: %s" % (path, exc))
    if path.endswith(".csv"):
        return serialize.family_from_csv(text)
    return serialize.family_from_dict(_json_value(text, path))


def _frame_report_dict(report):
    return {
        "lower": report.lower,
        "upper": report.upper,
        "is_frame": report.is_frame,
        "is_tight": report.is_tight,
        "is_parseval": report.is_parseval,
        "is_riesz": report.is_riesz,
    }


def _build_evaluator(kind, params):
    if kind == "szego":
        return rkhs.szego_evaluator()
    if kind == "model":
        if "blaschke" not in params:
            raise ValidationError("kind model requires blaschke")
        return rkhs.model_evaluator(_blaschke(params))
    if kind == "span":
        if "blaschke" not in params or "points" not in params:
            raise ValidationError("kind span requires blaschke and points")
        M = _space(params)
        return rkhs.span_kernel(M, _point_list(params["points"], "points"))
    if kind == "brownian_bridge":
        return rkhs.brownian_bridge_evaluator(params.get("N", 1000))
    if kind == "sinc":
        if "R" not in params:
            raise ValidationError("kind sinc requires R")
        return rkhs.sinc_evaluator(params["R"])
    raise ValidationError("unknown kernel kind %r" % kind)


def _kernel_args(kind, params, raw_y, raw_z):
    if kind in ("brownian_bridge", "sinc"):
        return _as_real(raw_y, "y"), _as_real(raw_z, "z")
    return _as_complex(raw_y, "y"), _as_complex(raw_z, "z")


def _do_kernel_eval(spec):
    kind = spec.params["kind"]
    K = _build_evaluator(kind, spec.params)
    y, z = _kernel_args(kind, spec.params, spec.params["y"], spec.params["z"])
    value = complex(K(y, z))
    return {"kind": kind, "value": serialize.complex_to_pair(value)}


def _do_kernel_psd(spec):
    kind = spec.params["kind"]
    K = _build_evaluator(kind, spec.params)
    raw = spec.params["sample"]
    if not isinstance(raw, list) or not raw:
        raise ValidationError("sample must be a nonempty list of points")
    if kind in ("brownian_bridge", "sinc"):
        sample = [_as_real(p, "sample") for p in raw]
    else:
        sample = [_as_complex(p, "sample") for p in raw]
    report = rkhs.psd_check(K, sample)
    return {
        "kind": kind,
        "psd": report.psd,
        "min_eig": report.min_eig,
        "max_asymmetry": report.max_asymmetry,
    }


def _do_frame_analyze(spec):
    F = load_family(spec.input_path)
    report = frames.frame_bounds(F)
    out = _frame_report_dict(report)
    out["count"] = F.count
    out["dim"] = F.dim
    out["frame_op"] = serialize.matrix_to_pairs(frames.frame_transforms(F).frame_op)
    out["kernel_matrix"] = (
        serialize.matrix_to_pairs(frames.kernel_matrix(F)) if report.is_frame else None
    )
    return out


def _do_frame_dual(spec):
    dual = frames.canonical_dual(load_family(spec.input_path))
    return {"vectors": serialize.matrix_to_pairs(dual.vectors)}


def _do_frame_gramian(spec):
    report = frames.gramian(load_family(spec.input_path))
    return {"matrix": serialize.matrix_to_pairs(report.matrix), "riesz": report.riesz}


def _do_blaschke_eval(spec):
    B = _blaschke(spec.params)
    z = _as_complex(spec.params["z"], "z")
    with_derivative = bool(spec.params.get("derivative", False))
    ev = eval_product(B, z, with_derivative=with_derivative)
    out = {
        "value": serialize.complex_to_pair(ev.value),
        "modulus": abs(ev.value),
    }
    if with_derivative:
        out["derivative"] = serialize.complex_to_pair(ev.derivative)
    return out


def _do_blaschke_diag(spec):
    pts = _point_list(spec.params["points"], "points")
    label = spec.params.get("label", "")
    if not isinstance(label, str):
        raise ValidationError("label must be a string")
    seq = DiskSequence(tuple(pts), label)
    if "theta" in spec.params:
        theta = _blaschke(spec.params, "theta")
    else:
        theta = FiniteBlaschkeProduct(tuple(pts))
    report = sequence_diagnostics(seq, theta)
    return {
        "label": label,
        "blaschke_partial": report.blaschke_partial,
        "inverse_gap_partial": report.inverse_gap_partial,
        "bessel_bound": report.bessel_bound,
        "sup_theta": report.sup_theta,
    }


def _do_blaschke_perturb(spec):
    lam = DiskSequence(tuple(_point_list(spec.params["lam"], "lam")))
    mu = DiskSequence(tuple(_point_list(spec.params["mu"], "mu")))
    eps = _as_real(spec.params["eps"], "eps")
    report = perturbation_transfer(lam, mu, eps)
    return {
        "holds": report.holds,
        "alpha": report.alpha,
        "per_index_ok": list(report.per_index_ok),
    }


def _do_clark(spec):
    M = _space(spec.params)
    zeta = _as_complex(spec.params.get("zeta", [1.0, 0.0]), "zeta")
    fam = modelspace.clark_basis(M, zeta)
    C = fam.coefficient_matrix()
    gram_dev = float(np.max(np.abs(C @ C.conj().T - np.eye(len(fam)))))
    return {
        "zeta": serialize.complex_to_pair(fam.zeta),
        "boundary_points": serialize.vector_to_pairs(np.array(fam.boundary_points)),
        "vectors": serialize.matrix_to_pairs(C),
        "gram_deviation": gram_dev,
        "origin_zero": fam.origin_zero,
    }


def _do_toeplitz_build(spec):
    phi = _symbol(spec.params)
    N = _as_int(spec.params["n"], "n")
    trunc = toeplitz.toeplitz_truncation(phi, N)
    sup, mesh = phi.sup_norm_estimate()
    return {
        "n": N,
        "matrix": serialize.matrix_to_pairs(trunc.matrix),
        "sup_norm": sup,
        "mesh": mesh,
        "analytic": phi.is_analytic(),
    }


def _do_toeplitz_hilbert(spec):
    raw = spec.params["n"]
    sizes = raw if isinstance(raw, list) else [raw]
    sizes = [_as_int(n, "n") for n in sizes]
    rows = []
    below = True
    for N in sizes:
        report = toeplitz.hilbert_gramian(N)
        below = below and report.below_pi
        rows.append(
            {"N": N, "max_eig": report.max_eig, "gap_to_pi": float(np.pi - report.max_eig)}
        )
    return {"rows": rows, "below_pi": below}


def _do_toeplitz_compress(spec):
    M = _space(spec.params)
    phi = _symbol(spec.params)
    return {"matrix": serialize.matrix_to_pairs(toeplitz.model_compression(M, phi))}


def _do_toeplitz_frame_image(spec):
    F = load_family(spec.input_path)
    phi = _symbol(spec.params)
    report = toeplitz.frame_image_report(F, phi)
    return {
        "bounds_before": _frame_report_dict(report.bounds_before),
        "bounds_after": _frame_report_dict(report.bounds_after),
        "symbol_bound": report.symbol_bound,
        "pinv_bound": report.pinv_bound,
        "symbol_bound_holds": report.symbol_bound_holds,
    }


def _do_toeplitz_clark_condition(spec):
    M = _space(spec.params)
    phi = _symbol(spec.params)
    zeta = _as_complex(spec.params.get("zeta", [1.0, 0.0]), "zeta")
    report = toeplitz.clark_frame_condition(M, phi, zeta)
    return {
        "delta": report.delta,
        "delta_T": report.delta_T,
        "condition_holds": report.condition_holds,
        "observed_lower": report.observed_lower,
    }


def _do_repro(spec):
    which = spec.params.get("which", "all")
    if which != "all" and which not in repro.SECTIONS:
        raise ValidationError("unknown reproduction %r" % which)
    seed = _as_int(spec.params.get("seed", repro.DEFAULT_SEED), "seed")
    return repro.run(which, seed=seed)


HANDLERS = {
    ("kernel", "eval"): _do_kernel_eval,
    ("kernel", "psd"): _do_kernel_psd,
    ("frame", "analyze"): _do_frame_analyze,
    ("frame", "dual"): _do_frame_dual,
    ("frame", "gramian"): _do_frame_gramian,
    ("blaschke", "eval"): _do_blaschke_eval,
    ("blaschke", "diag"): _do_blaschke_diag,
    ("blaschke", "perturb"): _do_blaschke_perturb,
    ("clark", ""): _do_clark,
    ("toeplitz", "build"): _do_toeplitz_build,
    ("toeplitz", "hilbert"): _do_toeplitz_hilbert,
    ("toeplitz", "compress"): _do_toeplitz_compress,
    ("toeplitz", "frame-image"): _do_toeplitz_frame_image,
    ("toeplitz", "clark-condition"): _do_toeplitz_clark_condition,
    ("repro", ""): _do_repro,
}

_ERROR_CODES = (
    (ValidationError, "validation", 2),
    (SerializationError, "validation", 2),
    (DomainError, "domain", 2),
    (KernelFrameError, "numeric", 1),
)


def _error_doc(exc):
    for cls, code, status in _ERROR_CODES:
        if isinstance(exc, cls):
            return status, {"error": {"code": code, "type": type(exc).__name__, "message": str(exc)}}
    raise exc


def run(spec):
    """Execute a JobSpec; returns (exit_status, report_document)."""
    try:
        spec.validate()
        result = HANDLERS[(spec.command, spec.action)](spec)
    except KernelFrameError as exc:
        return _error_doc(exc)
    doc = {
        "header": {
            "tool": "kernelframe",
            "version": __version__,
            "command": spec.command,
            "action": spec.action,
            "params": spec.params,
            "input_path": spec.input_path,
            "format": spec.fmt,
        },
        "result": result,
    }
    status = 0
    if spec.command == "repro" and not result["passed"]:
        status = 1
    return status, doc


def _flat_cell(value):
    if isinstance(value, float):
        return "%.17g" % value
    if isinstance(value, (str, int, bool)) or value is None:
        return str(value)
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def _result_rows(doc):
    """Flatten a result into (header, rows of str) for csv/table output."""
    result = doc["result"]
    if "sections" in result:
        header = ["section", "name", "expected", "computed", "tol", "status"]
        rows = []
        for section in sorted(result["sections"]):
            for r in result["sections"][section]:
                rows.append([
                    section, r["name"], _flat_cell(r["expected"]),
                    _flat_cell(r["computed"]), _flat_cell(r["tol"]),
                    "PASS" if r["passed"] else "FAIL",
                ])
        return header, rows
    if "rows" in result and isinstance(result["rows"], list) and result["rows"]:
        header = list(result["rows"][0])
        rows = [[_flat_cell(r.get(k)) for k in header] for r in result["rows"]]
        return header, rows
    header = ["key", "value"]
    rows = [[k, _flat_cell(result[k])] for k in sorted(result)]
    return header, rows


def render(doc, fmt):
    if fmt == "json":
        return serialize.dumps(doc)
    header, rows = _result_rows(doc)
    if fmt == "csv":
        lines = [",".join(header)]
        for r in rows:
            lines.append(",".join('"%s"' % c.replace('"', '""') if "," in c or '"' in c else c for c in r))
        return "\n".join(lines) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    head = doc.get("header", {})
    lines = ["kernelframe %s %s %s" % (head.get("version", ""), head.get("command", ""), head.get("action", "")),
             "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _add_common(parser):
    parser.add_argument("--output", default="-", help="output path, - for stdout")
    parser.add_argument("--format", default="json", choices=("json", "csv", "table"))


def _leaf(subparsers, name, command, action, help_text):
    p = subparsers.add_parser(
        name,
        help=help_text,
        epilog=schema_text(command, action),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_common(p)
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kernelframe",
        description="Frames, model spaces, reproducing kernels, Toeplitz truncations.",
    )
    parser.add_argument("--version", action="version", version="kernelframe " + __version__)
    top = parser.add_subparsers(dest="command", required=True)

    kernel = top.add_parser("kernel", help="kernel evaluation and PSD checks")
    ksub = kernel.add_subparsers(dest="action", required=True)
    p = _leaf(ksub, "eval", "kernel", "eval", "evaluate a named kernel at (y, z)")
    p.add_argument("--kind", required=True)
    p.add_argument("--y", required=True, help="JSON: [re,im] or number")
    p.add_argument("--z", required=True, help="JSON: [re,im] or number")
    p.add_argument("--blaschke", help="JSON product description")
    p.add_argument("--points", help="JSON list of [re,im]")
    p.add_argument("--trunc", type=int)
    p.add_argument("--n-terms", dest="N", type=int, help="series terms (brownian_bridge)")
    p.add_argument("--rate", dest="R", type=float, help="rate (sinc)")
    p = _leaf(ksub, "psd", "kernel", "psd", "sampled positive-semidefiniteness check")
    p.add_argument("--kind", required=True)
    p.add_argument("--sample", required=True, help="JSON list of points")
    p.add_argument("--blaschke")
    p.add_argument("--points")
    p.add_argument("--trunc", type=int)
    p.add_argument("--n-terms", dest="N", type=int)
    p.add_argument("--rate", dest="R", type=float)

    frame = top.add_parser("frame", help="frame bounds, duals, Gramians")
    fsub = frame.add_subparsers(dest="action", required=True)
    for action, txt in (("analyze", "frame bounds, flags, frame operator, kernel matrix"),
                        ("dual", "canonical dual family"),
                        ("gramian", "Gramian matrix and Riesz flag")):
        p = _leaf(fsub, action, "frame", action, txt)
        p.add_argument("--input", required=True, help="family file, .json or .csv")

    bl = top.add_parser("blaschke", help="finite Blaschke products and sequences")
    bsub = bl.add_subparsers(dest="action", required=True)
    p = _leaf(bsub, "eval", "blaschke", "eval", "evaluate a product, optionally its derivative")
    p.add_argument("--blaschke", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--derivative", action="store_true")
    p = _leaf(bsub, "diag", "blaschke", "diag", "summability and Bessel diagnostics")
    p.add_argument("--points", required=True)
    p.add_argument("--theta", help="JSON product; defaults to the product with those zeros")
    p.add_argument("--label", default="")
    p = _leaf(bsub, "perturb", "blaschke", "perturb", "pseudohyperbolic perturbation transfer")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--eps", type=float, required=True)

    p = _leaf(top, "clark", "clark", "", "orthonormal boundary basis of a model space")
    p.add_argument("--blaschke", required=True)
    p.add_argument("--zeta", help="JSON [re,im], default [1,0]")
    p.add_argument("--trunc", type=int)

    tp = top.add_parser("toeplitz", help="symbols, truncations, compressions")
    tsub = tp.add_subparsers(dest="action", required=True)
    p = _leaf(tsub, "build", "toeplitz", "build", "Toeplitz truncation of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--n", type=int, required=True)
    p = _leaf(tsub, "hilbert", "toeplitz", "hilbert", "Hilbert-matrix spectrum rows")
    p.add_argument("--n", required=True, help="JSON int or list of ints")
    p = _leaf(tsub, "compress", "toeplitz", "compress", "compression of a symbol to a model space")
    p.add_argument("--blaschke", required=True)
    p.add_argument("--symbol", required=True)
    p.add_argument("--trunc", type=int)
    p = _leaf(tsub, "frame-image", "toeplitz", "frame-image", "frame bounds after applying a Toeplitz truncation")
    p.add_argument("--input", required=True)
    p.add_argument("--symbol", required=True)
    p = _leaf(tsub, "clark-condition", "toeplitz", "clark-condition", "lower-bound condition for a compressed symbol")
    p.add_argument("--blaschke", required=True)
    p.add_argument("--symbol", required=True)
    p.add_argument("--zeta")
    p.add_argument("--trunc", type=int)

    p = _leaf(top, "repro", "repro", "", "machine-checked reproduction tables")
    p.add_argument("which", nargs="?", default="all", choices=("all",) + repro.SECTIONS)
    p.add_argument("--seed", type=int, default=repro.DEFAULT_SEED)

    return parser


_JSON_FLAGS = {"blaschke", "symbol", "points", "sample", "theta", "lam", "mu", "y", "z", "zeta"}

_PASSTHROUGH = {"kind", "derivative", "label", "eps", "trunc", "N", "R", "seed", "which"}


def spec_from_args(args):
    command = args.command
    action = getattr(args, "action", "") or ""
    params = {}
    for key in _JSON_FLAGS | _PASSTHROUGH:
        if not hasattr(args, key):
            continue
        value = getattr(args, key)
        if value is None or (key in ("derivative",) and value is False):
            continue
        if key == "label" and value == "":
            continue
        params[key] = _json_value(value, "--" + key) if key in _JSON_FLAGS else value
    if command == "toeplitz" and action == "hilbert":
        params["n"] = _json_value(args.n, "--n")
    elif hasattr(args, "n"):
        params["n"] = args.n
    return JobSpec(
        command=command,
        action=action,
        params=params,
        input_path=getattr(args, "input", None),
        output=args.output,
        fmt=args.format,
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = spec_from_args(args)
    except KernelFrameError as exc:
        status, doc = _error_doc(exc)
        sys.stderr.write(serialize.dumps(doc))
        return status
    status, doc = run(spec)
    if "error" in doc:
        sys.stderr.write(serialize.dumps(doc))
        return status
    text = render(doc, spec.fmt)
    if spec.output == "-":
        sys.stdout.write(text)
    else:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
