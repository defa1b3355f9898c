"""The curve corpus: loading, validation, and record-level cross checks.

The corpus ships as JSON with exact rationals as 'p/q' strings and field
elements as nested coordinate lists over the field tower.  Parametrizations
are stored in the factored form in which they are printed; the loader
expands them, rebuilds every claim, and enforces the structural invariants
(degree six, no common factor, Milnor total 19, exactly one odd index,
location count matching the even entries).
"""

import hashlib
import json
import os
from dataclasses import dataclass, field as dc_field
from importlib import resources

from .curve import ParameterLocation, RationalPlaneCurve
from .numberfield import QQ, build_tower, coerce_into
from .polynomial import (
    TriPoly,
    UniPoly,
    homogenize_xy,
    squarefree_decomposition,
)
from .rationals import Rat
from .singularity import SingularityClaim, SingularityType


class CorpusError(Exception):
    pass


def default_corpus_path():
    env = os.environ.get("SEXTIC19_CORPUS")
    if env:
        return env
    return str(resources.files("sextic19").joinpath("corpus/sextics.json"))


def _schema_path():
    return str(resources.files("sextic19").joinpath("corpus/schema.json"))


def decode_field(desc):
    gens = [(g["name"], [Rat(c) for c in g["minpoly"]])
            for g in desc["generators"]]
    if not gens:
        return QQ
    return build_tower(gens)


def decode_elem(fld, data):
    if isinstance(data, str):
        return coerce_into(fld, Rat(data))
    if fld == QQ:
        raise CorpusError("nested coefficient for a rational value")
    if len(data) != fld.degree:
        raise CorpusError(
            "coefficient has %d coordinates, field degree is %d"
            % (len(data), fld.degree)
        )
    return tuple(decode_elem(fld.base, d) for d in data)


def decode_poly(fld, coeffs):
    return UniPoly(fld, [decode_elem(fld, c) for c in coeffs])


def decode_factors(fld, factors):
    acc = UniPoly.one(fld)
    for fac in factors:
        acc = acc * decode_poly(fld, fac["coeffs"]) ** fac["power"]
    return acc


def decode_location(fld, data, components=None):
    kind = data["kind"]
    if kind == "infinity":
        return ParameterLocation.at_infinity()
    if kind == "value":
        return ParameterLocation.at_value(decode_elem(fld, data["t"]))
    if kind == "roots":
        return ParameterLocation.at_roots(decode_poly(fld, data["poly"]))
    if kind == "pair":
        def dec(v):
            return "inf" if v == "inf" else decode_elem(fld, v)
        return ParameterLocation.at_pair(dec(data["t1"]), dec(data["t2"]))
    if kind == "double_roots":
        comp = components[data["component"]]
        _, parts = squarefree_decomposition(comp)
        quads = [p for p, m in parts if m == 2 and p.degree == 2]
        if len(quads) != 1:
            raise CorpusError(
                "double_roots location needs exactly one squared quadratic"
            )
        return ParameterLocation.at_roots(quads[0])
    raise CorpusError("unknown location kind %r" % kind)


def _descend_elem(fld, rep):
    """One tower level down, or None if the top coordinates are nonzero."""
    if fld == QQ:
        return None
    if any(not fld.base.is_zero(c) for c in rep[1:]):
        return None
    return rep[0]


def descend_unipoly(poly):
    """Coerce a polynomial down the tower as far as its coefficients allow."""
    while poly.field != QQ:
        lowered = [_descend_elem(poly.field, c) for c in poly.coeffs]
        if any(c is None for c in lowered):
            return poly
        poly = UniPoly(poly.field.base, lowered, normalize=False)
    return poly


def descend_tripoly(F):
    while F.field != QQ:
        lowered = {e: _descend_elem(F.field, c) for e, c in F.terms.items()}
        if any(c is None for c in lowered.values()):
            return F
        F = TriPoly(F.field.base, lowered, normalize=False)
    return F


def decode_tripoly_hform(fld, data, degree=6):
    """Printed implicit equation: sum of coeffs(x) * y^ypow * h(x)^hpow."""
    h = decode_poly(fld, data["h"])
    terms = {}
    for row in data["terms"]:
        poly = decode_poly(fld, row["coeffs"])
        for _ in range(row.get("hpow", 0)):
            poly = poly * h
        for i in range(poly.degree + 1):
            c = poly.coeff(i)
            if fld.is_zero(c):
                continue
            key = (i, row["ypow"])
            cur = terms.get(key)
            terms[key] = fld.add(cur, c) if cur is not None else c
    terms = {k: v for k, v in terms.items() if not fld.is_zero(v)}
    return homogenize_xy(fld, terms, degree), h


@dataclass
class PencilData:
    """Pencil of cubics g_lambda = g0 + lambda*g1 in the chart z = 1,
    stored as y-coefficient lists of x-polynomials, with the known
    basepoint divisor of the y-resultant."""

    g0: list
    g1: list
    basepoint: object
    h: object


def decode_pencil(fld, data):
    h = decode_poly(fld, data["h"])
    max_y = max(row["ypow"] for row in data["terms"])
    g0 = [UniPoly.zero(fld) for _ in range(max_y + 1)]
    g1 = [UniPoly.zero(fld) for _ in range(max_y + 1)]
    for row in data["terms"]:
        poly = decode_poly(fld, row["coeffs"])
        for _ in range(row.get("hpow", 0)):
            poly = poly * h
        target = g0 if row["lampow"] == 0 else g1
        target[row["ypow"]] = target[row["ypow"]] + poly
    bp = data["basepoint_factor"]
    base = UniPoly.const(fld, decode_elem(fld, bp["scalar"]))
    for fac in bp["factors"]:
        base = base * decode_poly(fld, fac["coeffs"]) ** fac["power"]
    return PencilData(g0=g0, g1=g1, basepoint=base, h=h)


FLAG_KEYS = (
    "E_differs_from_F",
    "has_symmetry",
    "has_alt_parametrization",
    "has_printed_implicit",
    "has_pencil",
    "autodual_claimed",
)


@dataclass
class CurveRecord:
    id: int
    name: str
    multiset: list
    field: object
    field_F_desc: dict
    field_E_desc: dict
    x: object
    y: object
    z: object
    p: object
    odd_claim: object
    even_claims: list
    flags: dict
    symmetry: object
    notes: str
    printed_implicit: object = None
    printed_implicit_h: object = None
    pencil: object = None
    alt: object = None
    conic_reduction: object = None
    raw: dict = dc_field(default=None, repr=False)

    @property
    def curve(self):
        return RationalPlaneCurve(self.field, self.x, self.y, self.z)

    @property
    def claims(self):
        return [self.odd_claim] + list(self.even_claims)

    def singular_point_count(self):
        return sum(c.point_count() for c in self.claims)

    def describe(self):
        gens = ", ".join(g["name"] for g in self.field_E_desc["generators"])
        field = "Q(%s)" % gens if gens else "Q"
        return "%2d  %-18s field %s" % (self.id, self.name, field)


@dataclass
class AltParametrization:
    field: object
    x: object
    y: object
    z: object
    odd_location: object
    first_generator_image: object

    @property
    def curve(self):
        return RationalPlaneCurve(self.field, self.x, self.y, self.z)


def _decode_record(data):
    fld = decode_field(data["field_E"])
    comps = {
        name: decode_factors(fld, data["parametrization"][name])
        for name in ("x", "y", "z")
    }
    p = decode_poly(fld, data["p"]) if data["p"] is not None else None
    odd = SingularityClaim(
        SingularityType(data["odd"]["n"]),
        decode_location(fld, data["odd"]["location"], comps),
    )
    evens = [
        SingularityClaim(
            SingularityType(e["n"]),
            decode_location(fld, e["location"], comps),
        )
        for e in data["even"]
    ]
    symmetry = None
    if data.get("symmetry"):
        from .curve import MoebiusMap, ProjectiveMap

        sm = data["symmetry"]
        symmetry = (
            ProjectiveMap(fld, [[decode_elem(fld, v) for v in row]
                                for row in sm["matrix"]]),
            MoebiusMap(fld, *[decode_elem(fld, v) for v in sm["moebius"]]),
        )
    rec = CurveRecord(
        id=data["id"],
        name=data["name"],
        multiset=list(data["multiset"]),
        field=fld,
        field_F_desc=data["field_F"],
        field_E_desc=data["field_E"],
        x=comps["x"], y=comps["y"], z=comps["z"],
        p=p,
        odd_claim=odd,
        even_claims=evens,
        flags={k: bool(data["flags"].get(k, False)) for k in FLAG_KEYS},
        symmetry=symmetry,
        notes=data.get("notes", ""),
        raw=data,
    )
    if data.get("printed_implicit"):
        F6, h6 = decode_tripoly_hform(fld, data["printed_implicit"])
        rec.printed_implicit = descend_tripoly(F6)
        rec.printed_implicit_h = descend_unipoly(h6)
    if data.get("pencil"):
        pen = decode_pencil(fld, data["pencil"])
        g0 = [descend_unipoly(r) for r in pen.g0]
        g1 = [descend_unipoly(r) for r in pen.g1]
        fields = {r.field for r in g0 + g1 if not r.is_zero()}
        # keep every row over one common field (the largest that occurs)
        target = max(fields, key=lambda f: f.degree_over_q)
        pen.g0 = [r.map_field(target) for r in g0]
        pen.g1 = [r.map_field(target) for r in g1]
        pen.basepoint = descend_unipoly(pen.basepoint).map_field(target)
        pen.h = descend_unipoly(pen.h).map_field(target)
        rec.pencil = pen
    if data.get("alt_parametrization"):
        alt = data["alt_parametrization"]
        afld = decode_field(alt["field"])
        rec.alt = AltParametrization(
            field=afld,
            x=decode_factors(afld, alt["x"]),
            y=decode_factors(afld, alt["y"]),
            z=decode_factors(afld, alt["z"]),
            odd_location=decode_location(afld, alt["odd_location"]),
            first_generator_image=decode_poly(
                afld, alt["first_generator_image"]
            ),
        )
    if data.get("conic_reduction"):
        cr = data["conic_reduction"]
        rec.conic_reduction = {
            "equation": [decode_elem(fld, v) for v in cr["equation"]],
            "solution": [decode_elem(fld, v) for v in cr["solution"]],
        }
    return rec


def _check_invariants(rec):
    errs = []
    if sum(rec.multiset) != 19:
        errs.append("Milnor indices sum to %d, not 19" % sum(rec.multiset))
    odd_indices = [n for n in rec.multiset if n % 2 == 1]
    if len(odd_indices) != 1:
        errs.append("%d odd indices, expected exactly one" % len(odd_indices))
    if odd_indices and rec.odd_claim.stype.n != odd_indices[0]:
        errs.append("odd claim does not match the multiset")
    even_from_multiset = [n for n in rec.multiset if n % 2 == 0]
    claimed = []
    for c in rec.even_claims:
        claimed.extend([c.stype.n] * c.point_count())
    if sorted(claimed) != sorted(even_from_multiset):
        errs.append(
            "even claims %s do not cover the multiset %s"
            % (claimed, even_from_multiset)
        )
    curve = rec.curve  # raises on common factors / degree mismatch
    if curve.degree != 6:
        errs.append("parametrization degree %d" % curve.degree)
    if errs:
        raise CorpusError("record %d: %s" % (rec.id, "; ".join(errs)))


def load_corpus(path=None, validate_schema=True):
    """Load and validate the corpus; returns a list of CurveRecord."""
    path = path or default_corpus_path()
    with open(path) as fh:
        doc = json.load(fh)
    if validate_schema:
        import jsonschema

        with open(_schema_path()) as fh:
            schema = json.load(fh)
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as exc:
            raise CorpusError(
                "schema violation at %s: %s"
                % ("/".join(str(p) for p in exc.absolute_path), exc.message)
            ) from exc
    records = []
    for data in doc["curves"]:
        rec = _decode_record(data)
        _check_invariants(rec)
        records.append(rec)
    if [r.id for r in records] != list(range(1, len(records) + 1)):
        raise CorpusError("record ids are not 1..%d" % len(records))
    return records


def corpus_sha256(path=None):
    path = path or default_corpus_path()
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def roundtrip_identity(path=None):
    """parse -> serialize -> parse is the identity on the corpus document."""
    path = path or default_corpus_path()
    with open(path) as fh:
        doc = json.load(fh)
    again = json.loads(json.dumps(doc, sort_keys=True))
    return doc == again


def cross_check_record(rec):
    """Internal-consistency report for one record.

    Verifies the Milnor sum and odd-index uniqueness, compares the printed
    implicit equation (where present) with the computed one up to a unit,
    and checks that an alternative parametrization cuts out the same sextic.
    """
    from .curve import implicitize

    report = {"id": rec.id, "ok": True, "checks": {}}

    def record(name, ok, detail=""):
        report["checks"][name] = {"ok": bool(ok), "detail": detail}
        if not ok:
            report["ok"] = False

    record("milnor_sum", sum(rec.multiset) == 19,
           "sum = %d" % sum(rec.multiset))
    record("one_odd_index",
           len([n for n in rec.multiset if n % 2 == 1]) == 1)

    F = None
    if rec.printed_implicit is not None or rec.alt is not None:
        F, mapdeg = implicitize(rec.curve)
        record("implicit_degree", F.total_degree() == 6 and mapdeg == 1,
               "degree %d, map degree %d" % (F.total_degree(), mapdeg))

    if rec.printed_implicit is not None:
        printed = rec.printed_implicit.map_field(rec.field)
        unit = F.scalar_multiple_of(printed)
        record("printed_implicit_matches", unit is not None,
               "unit %s" % (rec.field.to_str(unit) if unit else "none"))

    if rec.alt is not None:
        ok, detail, _diag = _alt_same_sextic(rec, F)
        record("alt_parametrization_same_curve", ok, detail)
    return report


def _alt_same_sextic(rec, F):
    """The two printed parametrizations of a record cut out the same curve.

    The primary implicit equation descends to the real subfield F
    (coefficients free of the second generator) and is mapped into the
    alternative field through the recorded image of the first generator.
    The alternative implicit equation is then matched against it up to a
    unit combined with a diagonal coordinate scaling (X, Y, Z) ->
    (l1 X, l2 Y, Z): the printed models are normalized per-parametrization,
    so their embeddings may differ by exactly such a rescaling.  Both sign
    choices for the abstract generator are admitted.  Returns
    (ok, detail, diagonal) with the certified scaling.
    """
    from .curve import implicitize

    Falt, mapdeg = implicitize(rec.alt.curve)
    if Falt.total_degree() != 6 or mapdeg != 1:
        return False, "alternative parametrization degree %d" % Falt.total_degree(), None
    E = rec.field          # tower: Q(first generator) with a quadratic on top
    A = rec.alt.field
    img_elem = rec.alt.first_generator_image.eval(A.gen)
    for flip in (False, True):
        use = A.neg(img_elem) if flip else img_elem
        terms = {}
        good = True
        for e, c in F.terms.items():
            # c is a tuple over Q(first generator); the top component must
            # vanish for the equation to descend to F
            if any(not E.base.is_zero(ci) for ci in c[1:]):
                good = False
                break
            rep = A.zero
            power = A.one
            for q in c[0]:
                rep = A.add(rep, A.scalar_mul(q, power))
                power = A.mul(power, use)
            terms[e] = rep
        if not good:
            return False, "implicit equation does not descend to F", None
        mapped = TriPoly(A, terms)
        unit = Falt.scalar_multiple_of(mapped)
        if unit is not None:
            return True, "unit %s (generator sign %s)" % (
                A.to_str(unit), "-" if flip else "+"
            ), (A.one, A.one, A.one)
        rel = _diagonal_relation(A, mapped, Falt)
        if rel is not None:
            u, l1, l2 = rel
            return True, (
                "equal after the diagonal substitution (X, Y, Z) -> "
                "(%s * X, %s * Y, Z), unit %s (generator sign %s)"
                % (A.to_str(l1), A.to_str(l2), A.to_str(u),
                   "-" if flip else "+")
            ), (l1, l2, A.one)
    return False, "no generator image matches", None


def _diagonal_relation(A, mapped, target):
    """Find u, l1, l2 with target == u * mapped(l1 X, l2 Y, Z), or None."""
    if set(mapped.terms) != set(target.terms):
        return None
    from .numberfield import field_pow

    try:
        e0 = next(e for e in mapped.terms if e[0] == 0 and e[1] == 0)
        ex = next(e for e in mapped.terms if e[0] == 1 and e[1] == 0)
        ey = next(e for e in mapped.terms if e[0] == 0 and e[1] == 1)
    except StopIteration:
        return None
    u = A.div(target.terms[e0], mapped.terms[e0])
    l1 = A.div(A.div(target.terms[ex], mapped.terms[ex]), u)
    l2 = A.div(A.div(target.terms[ey], mapped.terms[ey]), u)
    for e, c in mapped.terms.items():
        pred = A.mul(u, A.mul(field_pow(A, l1, e[0]), field_pow(A, l2, e[1])))
        if not A.eq(A.mul(pred, c), target.terms[e]):
            return None
    return u, l1, l2
