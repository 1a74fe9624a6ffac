"""JSON/CSV bridges for the package's value types.

Complex scalars always travel as two-element arrays [re, im]; matrices as
nested lists of those pairs; vector-family CSV uses a header row and
interleaved re/im columns. JSON emission is deterministic (sorted keys,
fixed separators).
"""

import csv
import hashlib
import io
import json

import numpy as np

from .blaschke import FiniteBlaschkeProduct
from .errors import SerializationError, ValidationError
from .frames import VectorFamily
from .modelspace import ModelVector
from .toeplitz import SymbolCoefficients


def complex_to_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair):
    if isinstance(pair, (int, float)):
        return complex(pair)
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValidationError("complex values must be [re, im], got %r" % (pair,))
    return complex(float(pair[0]), float(pair[1]))


def vector_to_pairs(v):
    return [complex_to_pair(z) for z in np.asarray(v).ravel()]


def matrix_to_pairs(M):
    M = np.atleast_2d(np.asarray(M))
    return [[complex_to_pair(z) for z in row] for row in M]


def real_matrix_to_lists(M):
    return [[float(x) for x in row] for row in np.atleast_2d(np.asarray(M))]


def dumps(obj):
    """Canonical JSON text: sorted keys, stable separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def blaschke_to_dict(B):
    return {
        "front": complex_to_pair(B.front),
        "zeros": [complex_to_pair(z) for z in B.zeros],
    }


def blaschke_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError("Blaschke payload must be an object")
    unknown = set(data) - {"front", "zeros"}
    if unknown:
        raise ValidationError("unknown Blaschke keys: %s" % sorted(unknown))
    if "zeros" not in data:
        raise ValidationError("Blaschke payload requires 'zeros'")
    zeros = tuple(pair_to_complex(z) for z in data["zeros"])
    front = pair_to_complex(data.get("front", [1.0, 0.0]))
    return FiniteBlaschkeProduct(zeros, front)


def space_hash(B):
    """Stable identifier of the generating product, for vector payloads."""
    parts = ["%.17g,%.17g" % (B.front.real, B.front.imag)]
    for z in B.zeros:
        parts.append("%.17g,%.17g" % (z.real, z.imag))
    return hashlib.sha256(";".join(parts).encode("ascii")).hexdigest()[:16]


def model_vector_to_dict(v):
    return {
        "coeffs": vector_to_pairs(v.coeffs),
        "space": space_hash(v.space.B),
    }


def model_vector_from_dict(M, data):
    if not isinstance(data, dict) or set(data) != {"coeffs", "space"}:
        raise ValidationError("model vector payload must have coeffs and space")
    if data["space"] != space_hash(M.B):
        raise SerializationError(
            "vector belongs to a different model space (hash %s != %s)"
            % (data["space"], space_hash(M.B))
        )
    coeffs = np.array([pair_to_complex(c) for c in data["coeffs"]])
    return ModelVector(coeffs, M)


def family_to_dict(F):
    return {"vectors": [vector_to_pairs(row) for row in F.vectors]}


def family_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError("family payload must be an object")
    unknown = set(data) - {"vectors", "dim"}
    if unknown:
        raise ValidationError("unknown family keys: %s" % sorted(unknown))
    if "vectors" not in data or not data["vectors"]:
        raise ValidationError("family payload requires nonempty 'vectors'")
    rows = [[pair_to_complex(c) for c in row] for row in data["vectors"]]
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValidationError("family rows have mixed lengths %s" % sorted(widths))
    return VectorFamily(rows, dim=data.get("dim"))


def family_to_csv(F):
    """Header row f{k}_re,f{k}_im then one vector per line."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = []
    for k in range(F.dim):
        header += ["f%d_re" % k, "f%d_im" % k]
    writer.writerow(header)
    for row in F.vectors:
        flat = []
        for z in row:
            flat += ["%.17g" % z.real, "%.17g" % z.imag]
        writer.writerow(flat)
    return buf.getvalue()


def family_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if len(rows) < 2:
        raise ValidationError("CSV needs a header row and at least one vector")
    header = rows[0]
    if len(header) % 2 != 0 or not header:
        raise ValidationError("CSV header must hold re/im column pairs")
    vectors = []
    for line in rows[1:]:
        if not line:
            continue
        if len(line) != len(header):
            raise ValidationError(
                "CSV row width %d does not match header %d" % (len(line), len(header))
            )
        try:
            vals = [float(x) for x in line]
        except ValueError:
            raise ValidationError("CSV cell is not a number in row %r" % (line,))
        vectors.append([complex(vals[i], vals[i + 1]) for i in range(0, len(vals), 2)])
    return VectorFamily(vectors)


def symbol_to_dict(phi):
    return {str(k): complex_to_pair(a) for k, a in sorted(phi.coeffs.items())}


def symbol_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError("symbol payload must be an object of index: [re, im]")
    coeffs = {}
    for k, pair in data.items():
        try:
            idx = int(k)
        except (TypeError, ValueError):
            raise ValidationError("symbol index %r is not an integer" % (k,))
        coeffs[idx] = pair_to_complex(pair)
    return SymbolCoefficients(coeffs)
