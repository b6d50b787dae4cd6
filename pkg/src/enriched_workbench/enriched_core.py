"""enriched_core.py

This file handles V-categories, V-functors and 1_V-graded V-natural
transformations over a BaseCategory, their underlying plain versions, the
self-enrichment V̂, representable V-functors and V-adjunctions. Every
structure has a verifier that returns a Report with exact witnesses.

Structure maps are looked up through LazyTable, so a category can be given
by explicit tables (parsed input) or by formulas evaluated on demand
(self-enrichment, completions). Computed entries are memoised once and then
shared read-only.
"""

# Get packages.
import logging
import threading
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence
import numpy as np

# User defined modules.
from enriched_workbench import linalg
from enriched_workbench.base_category import (
    BaseCategory, GradedMorphism, GradedObject, hom_dimension)
from enriched_workbench.errors import CoverageGap, ShapeMismatch
from enriched_workbench.exact_scalars import Cyclotomic, one
from enriched_workbench.reports import Report
from enriched_workbench.utils import sweep, tuples

# Set up logging.
logger = logging.getLogger(__name__)

Label = Hashable


class LazyTable:
    """A dict-or-formula lookup with a memo guarded for exclusive writes."""

    def __init__(self, source, what: str):
        self._source = source
        self._what = what
        self._memo: Dict[Any, Any] = {}
        self._lock = threading.Lock()

    def get(self, *key):
        """Look up (and memoise) the entry for key.

        Raises:
            CoverageGap: If an explicit table has no entry for key."""
        memo_key = key[0] if len(key) == 1 else key
        if memo_key in self._memo:
            return self._memo[memo_key]
        if isinstance(self._source, dict):
            if memo_key not in self._source:
                raise CoverageGap([memo_key], self._what)
            value = self._source[memo_key]
        else:
            value = self._source(*key)
        with self._lock:
            return self._memo.setdefault(memo_key, value)

    def overridden(self, overrides: Dict) -> "LazyTable":
        """A copy whose entries in `overrides` replace the originals."""
        source = self._source

        def lookup(*key):
            memo_key = key[0] if len(key) == 1 else key
            if memo_key in overrides:
                return overrides[memo_key]
            if isinstance(source, dict):
                if memo_key not in source:
                    raise CoverageGap([memo_key], self._what)
                return source[memo_key]
            return source(*key)
        return LazyTable(lookup, self._what)


class VCategory:
    """A finite V-category.

    Attributes:
        base (BaseCategory): The base of enrichment.
        objects (list): Object labels.
        name (str): A label used in logs and reports."""

    def __init__(self, base: BaseCategory, objects: Sequence[Label],
                 hom, ident, comp, name: str = "C"):
        self.base = base
        self.objects = list(dict.fromkeys(objects))
        self.name = name
        self._hom = hom if isinstance(hom, LazyTable) else \
            LazyTable(hom, "hom objects")
        self._ident = ident if isinstance(ident, LazyTable) else \
            LazyTable(ident, "identities")
        self._comp = comp if isinstance(comp, LazyTable) else \
            LazyTable(comp, "compositions")

    def hom(self, a: Label, b: Label) -> GradedObject:
        """C(a -> b)."""
        return self._hom.get(a, b)

    def ident(self, a: Label) -> GradedMorphism:
        """j_a: 1_V -> C(a -> a)."""
        return self._ident.get(a)

    def comp(self, a: Label, b: Label, c: Label) -> GradedMorphism:
        """−∘_C−: C(a -> b) ⊗ C(b -> c) -> C(a -> c)."""
        return self._comp.get(a, b, c)

    def override(self, ident: Optional[Dict] = None,
                 comp: Optional[Dict] = None,
                 name: Optional[str] = None) -> "VCategory":
        """A copy with some identities or compositions replaced."""
        return VCategory(
            self.base, self.objects, self._hom,
            self._ident.overridden(ident or {}),
            self._comp.overridden(comp or {}),
            name or f"{self.name}'")

    def __contains__(self, a) -> bool:
        return a in self.objects

    def __repr__(self):
        return f"VCategory({self.name}, {len(self.objects)} objects)"


class VFunctor:
    """A V-functor F: C -> D.

    Attributes:
        source (VCategory): C.
        target (VCategory): D.
        name (str): A label."""

    def __init__(self, source: VCategory, target: VCategory, obj_map,
                 mor, name: str = "F"):
        self.source = source
        self.target = target
        self.name = name
        self._obj = obj_map if isinstance(obj_map, LazyTable) else \
            LazyTable(obj_map, "object images")
        self._mor = mor if isinstance(mor, LazyTable) else \
            LazyTable(mor, "functor components")

    def __call__(self, a: Label) -> Label:
        return self._obj.get(a)

    def component(self, a: Label, b: Label) -> GradedMorphism:
        """F_{a->b}: C(a -> b) -> D(F(a) -> F(b))."""
        return self._mor.get(a, b)

    def override(self, mor: Dict, name: Optional[str] = None) -> "VFunctor":
        """A copy with some components replaced."""
        return VFunctor(self.source, self.target, self._obj,
                        self._mor.overridden(mor), name or f"{self.name}'")

    def __repr__(self):
        return f"VFunctor({self.name}: {self.source.name} -> " \
               f"{self.target.name})"


class VNatTransf:
    """A 1_V-graded V-natural transformation σ: F => G.

    Attributes:
        source (VFunctor): F.
        target (VFunctor): G.
        name (str): A label."""

    def __init__(self, source: VFunctor, target: VFunctor, components,
                 name: str = "sigma"):
        self.source = source
        self.target = target
        self.name = name
        self._components = components if isinstance(components, LazyTable) \
            else LazyTable(components, "transformation components")

    def component(self, a: Label) -> GradedMorphism:
        """σ_a: 1_V -> D(F(a) -> G(a))."""
        return self._components.get(a)

    def override(self, components: Dict) -> "VNatTransf":
        """A copy with some components replaced."""
        return VNatTransf(self.source, self.target,
                          self._components.overridden(components),
                          f"{self.name}'")


# Construction helpers --------------------------------------------------------
def structure_tables(C: VCategory) -> Dict[str, Dict]:
    """Materialise every hom, identity and composition of C."""
    objects = C.objects
    return {
        "hom": {(a, b): C.hom(a, b) for a in objects for b in objects},
        "ident": {a: C.ident(a) for a in objects},
        "comp": {(a, b, c): C.comp(a, b, c)
                 for a in objects for b in objects for c in objects},
    }


def materialize(C: VCategory, name: Optional[str] = None) -> VCategory:
    """An eager copy of C backed by explicit tables."""
    tables = structure_tables(C)
    logger.info("Materialised %s: %d objects, %d compositions.",
                name or C.name, len(C.objects), len(tables["comp"]))
    return VCategory(C.base, C.objects, tables["hom"], tables["ident"],
                     tables["comp"], name or C.name)


def self_enrichment(base: BaseCategory,
                    window: Sequence[GradedObject],
                    name: str = "Vhat") -> VCategory:
    """
    The self-enriched V̂ restricted to a window of objects.

    V̂(u -> v) = u*⊗v, composition 1_{u*}⊗ev_v⊗1_w and identity coev_u.

    Args:
        base (BaseCategory): The base V.
        window (list): Objects of V; duplicates are dropped.
        name (str): Category label.

    Returns:
        VCategory: The self-enrichment on the window.
    """
    if not window:
        raise ValueError("The window of a self-enrichment must be nonempty.")

    def comp(u, v, w):
        return base.tensor_mors(base.identity(base.dual_obj(u)), base.ev(v),
                                base.identity(w))

    return VCategory(base, list(window), base.internal_hom, base.coev, comp,
                     name)


def superalgebra_category(base: BaseCategory, square,
                          name: str = "A") -> VCategory:
    """
    The one-object V-category of the superalgebra span{1, e}, e odd,
    with e·e = square·1.

    square = 1 gives the Clifford superalgebra, square = 0 the exterior one.

    Args:
        base (BaseCategory): A Z/2-graded base.
        square: The value of e·e (int, Fraction or Cyclotomic).
        name (str): Category label.

    Returns:
        VCategory: The category on the single object "*".
    """
    if base.group.cyclic_orders != (2,):
        raise ShapeMismatch("A superalgebra needs a Z/2-graded base.")
    odd = base.group.generators()[0]
    hom = base.word([base.group.zero, odd])
    unit = one(base.m)
    value = square if isinstance(square, Cyclotomic) else \
        Cyclotomic.rational(base.m, square)
    # Positions of hom⊗hom: (1,1), (1,e), (e,1), (e,e).
    comp = base.from_entries(base.tensor_obj(hom, hom), hom,
                             [(0, 0, unit), (1, 1, unit), (1, 2, unit),
                              (0, 3, value)])
    ident = base.from_entries(base.unit, hom, [(0, 0, unit)])
    return VCategory(base, ["*"], {("*", "*"): hom}, {"*": ident},
                     {("*", "*", "*"): comp}, name)


def identity_functor(C: VCategory) -> VFunctor:
    """1_C."""
    return VFunctor(C, C, lambda a: a,
                    lambda a, b: C.base.identity(C.hom(a, b)),
                    f"1_{C.name}")


def compose_functors(F: VFunctor, G: VFunctor) -> VFunctor:
    """F followed by G."""
    return VFunctor(F.source, G.target, lambda a: G(F(a)),
                    lambda a, b: F.component(a, b).then(
                        G.component(F(a), F(b))),
                    f"{F.name};{G.name}")


def representable_vfunctor(C: VCategory, a: Label,
                           target: Optional[VCategory] = None) -> VFunctor:
    """
    The V-representable functor R^a = C(a -> −): C -> V̂.

    Its component at (b, c) is the mate of −∘_C−, a map
    C(b -> c) -> C(a -> b)*⊗C(a -> c).

    Args:
        C (VCategory): The category.
        a (Label): The representing object.
        target (VCategory): A self-enrichment containing every C(a -> b);
            built from exactly those objects when omitted.

    Returns:
        VFunctor: R^a.
    """
    base = C.base
    window = list(dict.fromkeys(C.hom(a, b) for b in C.objects))
    if target is None:
        target = self_enrichment(base, window, "Vhat")
    missing = [u for u in window if u not in target.objects]
    if missing:
        raise CoverageGap(missing, "hom objects in the target window")
    return VFunctor(
        C, target, lambda b: C.hom(a, b),
        lambda b, c: base.mate_forward(C.comp(a, b, c), C.hom(a, b),
                                       C.hom(b, c)),
        f"R^{a}")


# Underlying category ---------------------------------------------------------
@dataclass
class UnderlyingCategory:
    """C^V: hom-sets V(1_V -> C(a -> b)) with the grade-0 standard basis.

    Morphisms are GradedMorphisms 1_V -> C(a -> b); composition is
    f∘g = (f⊗g)∘(−∘_C−).

    Attributes:
        vcat (VCategory): The V-category."""
    vcat: VCategory

    @property
    def objects(self) -> list:
        """Same objects as the V-category."""
        return self.vcat.objects

    def dim(self, a: Label, b: Label) -> int:
        """dim C^V(a -> b)."""
        return self.vcat.hom(a, b).mult(self.vcat.base.group.zero)

    def basis(self, a: Label, b: Label) -> List[GradedMorphism]:
        """Standard basis of C^V(a -> b)."""
        base = self.vcat.base
        return base.hom_basis(base.unit, self.vcat.hom(a, b))

    def identity(self, a: Label) -> GradedMorphism:
        """1_a = j_a."""
        return self.vcat.ident(a)

    def compose(self, f: GradedMorphism, g: GradedMorphism, a: Label,
                b: Label, c: Label) -> GradedMorphism:
        """f then g, for f in C^V(a -> b) and g in C^V(b -> c)."""
        return self.vcat.base.tensor_mor(f, g).then(self.vcat.comp(a, b, c))

    def combination(self, a: Label, b: Label, coeffs) -> GradedMorphism:
        """Σ c_i basis_i of C^V(a -> b)."""
        base = self.vcat.base
        return base.from_vector(base.unit, self.vcat.hom(a, b), coeffs)

    def invert(self, f: GradedMorphism, a: Label,
               b: Label) -> Optional[GradedMorphism]:
        """The inverse of f in C^V(a -> b), or None."""
        base = self.vcat.base
        g = solve_linear(base, base.unit, self.vcat.hom(b, a),
                         lambda x: self.compose(f, x, a, b, a),
                         self.identity(a))
        if g is None:
            return None
        if self.compose(g, f, b, a, b) != self.identity(b):
            return None
        return g

    def check_laws(self) -> Report:
        """Associativity on basis triples and both unit laws."""
        report = Report(f"underlying({self.vcat.name})")
        objs = self.objects
        for a, b, c, d in tuples(objs, 4):
            for f in self.basis(a, b):
                for g in self.basis(b, c):
                    for h in self.basis(c, d):
                        left = self.compose(self.compose(f, g, a, b, c), h,
                                            a, c, d)
                        right = self.compose(f, self.compose(g, h, b, c, d),
                                             a, b, d)
                        report.compare("associativity", "underlying category",
                                       (a, b, c, d), left, right)
        for a, b in tuples(objs, 2):
            for f in self.basis(a, b):
                report.compare("left_unit", "underlying category", (a, b),
                               self.compose(self.identity(a), f, a, a, b), f)
                report.compare("right_unit", "underlying category", (a, b),
                               self.compose(f, self.identity(b), a, b, b), f)
        return report


def underlying(C: VCategory) -> UnderlyingCategory:
    """C^V."""
    return UnderlyingCategory(C)


@dataclass
class UnderlyingFunctor:
    """F^V: f ∈ C^V(a -> b) maps to f∘F_{a->b}.

    Attributes:
        vfunctor (VFunctor): F."""
    vfunctor: VFunctor

    def __call__(self, a: Label) -> Label:
        return self.vfunctor(a)

    def apply(self, f: GradedMorphism, a: Label, b: Label) -> GradedMorphism:
        """F^V(f) for f in C^V(a -> b)."""
        return f.then(self.vfunctor.component(a, b))


def underlying_functor(F: VFunctor) -> UnderlyingFunctor:
    """F^V."""
    return UnderlyingFunctor(F)


@dataclass
class RepresentableUnderlying:
    """R_a = C^V(a -> −) valued in V: b maps to C(a -> b) and
    f ∈ C^V(b -> c) maps to (1 ⊗ f)∘(−∘_C−).

    Attributes:
        vcat (VCategory): C.
        a (Label): The representing object."""
    vcat: VCategory
    a: Label

    def __call__(self, b: Label) -> GradedObject:
        return self.vcat.hom(self.a, b)

    def apply(self, f: GradedMorphism, b: Label, c: Label) -> GradedMorphism:
        """R_a(f): C(a -> b) -> C(a -> c)."""
        base = self.vcat.base
        return base.tensor_mor(base.identity(self.vcat.hom(self.a, b)),
                               f).then(self.vcat.comp(self.a, b, c))


def representable_underlying(C: VCategory,
                             a: Label) -> RepresentableUnderlying:
    """R_a."""
    return RepresentableUnderlying(C, a)


# Linear helpers --------------------------------------------------------------
def linear_map_matrix(images: List[GradedMorphism], rows: int,
                      m: int) -> np.ndarray:
    """Matrix whose columns are the coordinate vectors of `images`."""
    matrix = linalg.zeros(rows, len(images), m)
    for col, image in enumerate(images):
        vector = image.to_vector()
        if len(vector) != rows:
            raise ShapeMismatch("Images do not share a codomain.")
        for row, value in enumerate(vector):
            matrix[row, col] = value
    return matrix


def solve_linear(base: BaseCategory, domain: GradedObject,
                 codomain: GradedObject,
                 image: Callable[[GradedMorphism], GradedMorphism],
                 target: GradedMorphism) -> Optional[GradedMorphism]:
    """
    Find x in V(domain -> codomain) with image(x) == target.

    Args:
        base (BaseCategory): The base (for scalars).
        domain (GradedObject): Domain of the unknown.
        codomain (GradedObject): Codomain of the unknown.
        image (Callable): A linear map on that space.
        target (GradedMorphism): The required image.

    Returns:
        GradedMorphism or None: A solution, or None when there is none.
    """
    rows = len(target.to_vector())
    basis = base.hom_basis(domain, codomain)
    if not basis:
        return base.zero_morphism(domain, codomain) \
            if target.is_zero() else None
    matrix = linear_map_matrix([image(x) for x in basis], rows, base.m)
    rhs = linalg.zeros(rows, 1, base.m)
    for row, value in enumerate(target.to_vector()):
        rhs[row, 0] = value
    solution = linalg.solve(matrix, rhs, base.m)
    if solution is None:
        return None
    return base.from_vector(domain, codomain, list(solution[:, 0]))


def map_rank(base: BaseCategory, basis: List[GradedMorphism],
             image: Callable[[GradedMorphism], GradedMorphism],
             rows: int) -> int:
    """Rank of a linear map given on a basis of its domain."""
    if not basis or rows == 0:
        return 0
    return linalg.rank(linear_map_matrix([image(x) for x in basis], rows,
                                         base.m))


# Verifiers -------------------------------------------------------------------
def _label(x) -> str:
    return str(x)


def verify_vcategory(C: VCategory) -> Report:
    """
    Check associativity of composition and both unit laws exactly.

    Args:
        C (VCategory): The category to verify.

    Returns:
        Report: One check per object tuple; failures carry the tuple and
        the two unequal morphisms.
    """
    base = C.base
    report = Report(f"vcategory({C.name})")
    objs = C.objects

    # Shapes.
    for a, b, c in tuples(objs, 3):
        comp = C.comp(a, b, c)
        expected = base.tensor_obj(C.hom(a, b), C.hom(b, c))
        ok = comp.domain == expected and comp.codomain == C.hom(a, c)
        report.record("composition_shape", "C(a->b)C(b->c) -> C(a->c)", ok,
                      {"tuple": [_label(x) for x in (a, b, c)]})
    for a in objs:
        j = C.ident(a)
        ok = j.domain == base.unit and j.codomain == C.hom(a, a)
        report.record("identity_shape", "j_a: 1 -> C(a->a)", ok,
                      {"tuple": [_label(a)], "identity": f"j_{a}"})
    if not report.passed:
        return report

    def associativity(key):
        a, b, c, d = key
        left = base.tensor_mor(C.comp(a, b, c),
                               base.identity(C.hom(c, d))).then(
                                   C.comp(a, c, d))
        right = base.tensor_mor(base.identity(C.hom(a, b)),
                                C.comp(b, c, d)).then(C.comp(a, b, d))
        return key, left, right

    for key, left, right in sweep(associativity, tuples(objs, 4),
                                  desc=f"{C.name} associativity"):
        report.compare("associativity", "composition is associative",
                       [_label(x) for x in key], left, right)

    for a, b in tuples(objs, 2):
        unit = base.identity(C.hom(a, b))
        left = base.tensor_mor(C.ident(a), unit).then(C.comp(a, a, b))
        right = base.tensor_mor(unit, C.ident(b)).then(C.comp(a, b, b))
        report.record("left_unit", "(j_a 1)∘(−∘−) = 1", left == unit,
                      {"tuple": [_label(a), _label(b)],
                       "identity": f"j_{a}", "left": left, "right": unit})
        report.record("right_unit", "(1 j_b)∘(−∘−) = 1", right == unit,
                      {"tuple": [_label(a), _label(b)],
                       "identity": f"j_{b}", "left": right, "right": unit})
    logger.info("verify_vcategory(%s): %s over %d objects.", C.name,
                report.verdict, len(objs))
    return report


def verify_vfunctor(F: VFunctor) -> Report:
    """
    Check that F preserves composition and identities exactly.

    Args:
        F (VFunctor): The functor.

    Returns:
        Report: Checks per object pair and triple.
    """
    C, D = F.source, F.target
    base = C.base
    report = Report(f"vfunctor({F.name})")
    objs = C.objects

    # Objects and shapes.
    for a in objs:
        report.record("object_image", "F(a) is an object of D",
                      F(a) in D.objects, {"tuple": [_label(a)]})
    if not report.passed:
        return report
    for a, b in tuples(objs, 2):
        comp = F.component(a, b)
        ok = comp.domain == C.hom(a, b) and \
            comp.codomain == D.hom(F(a), F(b))
        report.record("component_shape", "F_{a->b}: C(a->b) -> D(Fa->Fb)",
                      ok, {"tuple": [_label(a), _label(b)]})
    if not report.passed:
        return report

    def composition(key):
        a, b, c = key
        left = base.tensor_mor(F.component(a, b), F.component(b, c)).then(
            D.comp(F(a), F(b), F(c)))
        right = C.comp(a, b, c).then(F.component(a, c))
        return key, left, right

    for key, left, right in sweep(composition, tuples(objs, 3),
                                  desc=f"{F.name} composition"):
        report.compare("composition",
                       "(F F)∘(−∘_D−) = (−∘_C−)∘F",
                       [_label(x) for x in key], left, right)
    for a in objs:
        report.compare("identity", "j_a∘F_{a->a} = j_Fa", [_label(a)],
                       C.ident(a).then(F.component(a, a)), D.ident(F(a)))
    return report


def verify_vnat(sigma: VNatTransf) -> Report:
    """
    Check the naturality square
    (σ_a G)∘(−∘−) = (F σ_b)∘(−∘−).

    Args:
        sigma (VNatTransf): The transformation.

    Returns:
        Report: One check per object pair.
    """
    F, G = sigma.source, sigma.target
    C, D = F.source, F.target
    base = C.base
    report = Report(f"vnat({sigma.name})")
    for a in C.objects:
        s = sigma.component(a)
        ok = s.domain == base.unit and s.codomain == D.hom(F(a), G(a))
        report.record("component_shape", "σ_a: 1 -> D(Fa->Ga)", ok,
                      {"tuple": [_label(a)]})
    if not report.passed:
        return report

    def square(key):
        a, b = key
        left = base.tensor_mor(sigma.component(a), G.component(a, b)).then(
            D.comp(F(a), G(a), G(b)))
        right = base.tensor_mor(F.component(a, b), sigma.component(b)).then(
            D.comp(F(a), F(b), G(b)))
        return key, left, right

    for key, left, right in sweep(square, tuples(C.objects, 2),
                                  desc=f"{sigma.name} naturality"):
        report.compare("naturality",
                       "(σ_a G)∘(−∘−) = (F σ_b)∘(−∘−)",
                       [_label(x) for x in key], left, right)
    return report


def verify_underlying_nat(sigma: VNatTransf) -> Report:
    """Plain naturality of the underlying transformation on basis maps."""
    F, G = sigma.source, sigma.target
    C, D = F.source, F.target
    under_c, under_d = underlying(C), underlying(D)
    report = Report(f"underlying_nat({sigma.name})")
    for a, b in tuples(C.objects, 2):
        for f in under_c.basis(a, b):
            left = under_d.compose(sigma.component(a),
                                   f.then(G.component(a, b)),
                                   F(a), G(a), G(b))
            right = under_d.compose(f.then(F.component(a, b)),
                                    sigma.component(b), F(a), F(b), G(b))
            report.compare("underlying_naturality",
                           "σ_a∘G(f) = F(f)∘σ_b",
                           [_label(a), _label(b)], left, right)
    return report


def is_invertible_nat(sigma: VNatTransf) -> Report:
    """Invertibility of every component in the underlying category."""
    F, G = sigma.source, sigma.target
    under_d = underlying(F.target)
    report = Report(f"invertible({sigma.name})")
    for a in F.source.objects:
        inverse = under_d.invert(sigma.component(a), F(a), G(a))
        report.record("invertible", "σ_a is invertible in D^V",
                      inverse is not None,
                      {"tuple": [_label(a)],
                       "component": sigma.component(a)})
    return report


def verify_vadjunction(L: VFunctor, R: VFunctor,
                       theta: Callable[[Label, Label], GradedMorphism],
                       kappa: Optional[Callable] = None) -> Report:
    """
    Check the two V-adjunction diagrams for L: C -> D, R: D -> C.

    θ_{x,d}: D(L(x) -> d) -> C(x -> R(d)) and κ = θ^{-1}:
    (L_{x->y} κ_{y,d})∘(−∘_D−) = (−∘_C−)∘κ_{x,d} and
    (θ_{x,c} R_{c->d})∘(−∘_C−) = (−∘_D−)∘θ_{x,d}.

    Args:
        L (VFunctor): The left adjoint.
        R (VFunctor): The right adjoint.
        theta (Callable): θ_{x,d}.
        kappa (Callable): κ_{x,d}; computed blockwise from θ when omitted.

    Returns:
        Report: Both diagrams on all tuples, plus invertibility of θ.
    """
    C, D = L.source, L.target
    base = C.base
    report = Report(f"vadjunction({L.name} -| {R.name})")
    if kappa is None:
        def kappa(x, d):
            inverse = invert_morphism(base, theta(x, d))
            if inverse is None:
                raise ShapeMismatch(f"θ_({x},{d}) is not invertible.")
            return inverse

    for x in C.objects:
        for d in D.objects:
            ok = invert_morphism(base, theta(x, d)) is not None
            report.record("theta_invertible", "θ_{x,d} is invertible", ok,
                          {"tuple": [_label(x), _label(d)]})
    if not report.passed:
        return report

    for x in C.objects:
        for y in C.objects:
            for d in D.objects:
                left = base.tensor_mor(L.component(x, y), kappa(y, d)).then(
                    D.comp(L(x), L(y), d))
                right = C.comp(x, y, R(d)).then(kappa(x, d))
                report.compare("left_diagram",
                               "(L κ)∘(−∘_D−) = (−∘_C−)∘κ",
                               [_label(x), _label(y), _label(d)], left, right)
    for x in C.objects:
        for c in D.objects:
            for d in D.objects:
                left = base.tensor_mor(theta(x, c), R.component(c, d)).then(
                    C.comp(x, R(c), R(d)))
                right = D.comp(L(x), c, d).then(theta(x, d))
                report.compare("right_diagram",
                               "(θ R)∘(−∘_C−) = (−∘_D−)∘θ",
                               [_label(x), _label(c), _label(d)], left, right)
    return report


def invert_morphism(base: BaseCategory,
                    f: GradedMorphism) -> Optional[GradedMorphism]:
    """Blockwise inverse of a V-morphism, or None if not invertible."""
    if f.domain.multiplicities != f.codomain.multiplicities:
        return None
    blocks = {}
    for g, n in f.domain.multiplicities.items():
        inverse = linalg.inverse(f.block(g), base.m)
        if inverse is None:
            return None
        blocks[g] = inverse
    return GradedMorphism(f.codomain, f.domain, blocks, base.m)


def underlying_dimension_matches_base(C: VCategory) -> bool:
    """For V̂: dim V̂^V(u -> v) = dim V(u -> v) on the window."""
    under = underlying(C)
    return all(under.dim(u, v) == hom_dimension(u, v)
               for u in C.objects for v in C.objects)
