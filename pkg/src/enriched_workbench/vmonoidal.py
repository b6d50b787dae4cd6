"""vmonoidal.py

This file handles strict V-monoidal categories: the structure itself, its
verifier with the braided interchange law, V-monoidal functors, the
monoidal self-enrichment V̂ and the monoidal completion C̄.
"""

# Get packages.
import logging
import random
from typing import Callable, List, Optional, Sequence

# User defined modules.
from enriched_workbench.base_category import (
    BaseCategory, GradedMorphism, GradedObject)
from enriched_workbench.completion import (
    CompletionCategory, CompletionObject, complete, inclusion_functor)
from enriched_workbench.config import get_config
from enriched_workbench.enriched_core import (
    Label, LazyTable, VCategory, VFunctor, identity_functor, self_enrichment,
    underlying, verify_vcategory, verify_vfunctor)
from enriched_workbench.errors import CoverageGap, ShapeMismatch
from enriched_workbench.exact_scalars import one
from enriched_workbench.reports import Report
from enriched_workbench.utils import sweep, tuples

# Set up logging.
logger = logging.getLogger(__name__)

Braiding = Callable[[GradedObject, GradedObject], GradedMorphism]


class VMonoidalCategory:
    """A strict V-monoidal category.

    Attributes:
        vcat (VCategory): The underlying V-category.
        unit (Label): 1_C.
        name (str): A label."""

    def __init__(self, vcat: VCategory, unit: Label, obj_tensor, tensor_mor,
                 name: Optional[str] = None):
        self.vcat = vcat
        self.unit = unit
        self.name = name or vcat.name
        self._obj = obj_tensor if isinstance(obj_tensor, LazyTable) else \
            LazyTable(obj_tensor, "object tensor products")
        self._mor = tensor_mor if isinstance(tensor_mor, LazyTable) else \
            LazyTable(tensor_mor, "tensor morphisms")

    @property
    def base(self) -> BaseCategory:
        """The base of enrichment."""
        return self.vcat.base

    @property
    def objects(self) -> list:
        """The objects."""
        return self.vcat.objects

    def tensor_obj(self, a: Label, b: Label) -> Label:
        """ab."""
        return self._obj.get(a, b)

    def tensor_objs(self, *objs: Label) -> Label:
        """Iterated product (the unit for no arguments)."""
        result = self.unit
        for obj in objs:
            result = self.tensor_obj(result, obj)
        return result

    def tensor_mor(self, a: Label, b: Label, c: Label,
                   d: Label) -> GradedMorphism:
        """−⊗_C−: C(a -> b)⊗C(c -> d) -> C(ac -> bd)."""
        return self._mor.get(a, b, c, d)

    def under_tensor(self, f: GradedMorphism, g: GradedMorphism, a: Label,
                     b: Label, c: Label, d: Label) -> GradedMorphism:
        """f⊗g in C^V for f ∈ C^V(a -> b), g ∈ C^V(c -> d)."""
        return self.base.tensor_mor(f, g).then(self.tensor_mor(a, b, c, d))

    def override(self, tensor_mor: dict,
                 name: Optional[str] = None) -> "VMonoidalCategory":
        """A copy with some tensor morphisms replaced."""
        return VMonoidalCategory(self.vcat, self.unit, self._obj,
                                 self._mor.overridden(tensor_mor),
                                 name or f"{self.name}'")

    def __repr__(self):
        return f"VMonoidalCategory({self.name}, unit={self.unit})"


def swap_without_scalars(base: BaseCategory, u: GradedObject,
                         v: GradedObject) -> GradedMorphism:
    """The symmetry of the underlying graded spaces, u⊗v -> v⊗u, with no
    bicharacter scalars. Substituting it for β breaks braided interchange
    as soon as χ is nontrivial."""
    n_u, n_v = len(u.word), len(v.word)
    entries = [(j * n_u + i, i * n_v + j, one(base.m))
               for i in range(n_u) for j in range(n_v)]
    return base.from_entries(base.tensor_obj(u, v), base.tensor_obj(v, u),
                             entries)


def _sample(items: List, sample: Optional[int], seed: int) -> List:
    if sample is None or sample >= len(items):
        return items
    return random.Random(seed).sample(items, sample)


def verify_vmonoidal(M: VMonoidalCategory,
                     braiding: Optional[Braiding] = None,
                     sample: Optional[int] = None,
                     seed: int = 0) -> Report:
    """
    Check the V-monoidal axioms exactly.

    Strict object laws, unitality (j_1 1)∘(−⊗−) = 1, preservation of
    identities, associativity of −⊗− and the braided interchange law
    ((⊗_{a,b,d,e}) (⊗_{b,c,e,f}))∘(−∘−) =
    (1 β_{C(d->e),C(b->c)} 1)∘((−∘−) (−∘−))∘(⊗_{a,c,d,f}).

    Args:
        M (VMonoidalCategory): The category.
        braiding (Callable): Replacement for the base braiding in the
            interchange law (used to test sign sensitivity).
        sample (int): Check only this many of the 6-tuples (all by default).
        seed (int): Seed of the tuple sample.

    Returns:
        Report: The checks with witnesses.
    """
    C, base = M.vcat, M.base
    braid = braiding or base.braiding
    objs = C.objects
    report = Report(f"vmonoidal({M.name})")
    unit = M.unit

    # Objects.
    report.record("unit_object", "1_C is an object", unit in objs,
                  {"tuple": [str(unit)]})
    for a, b in tuples(objs, 2):
        report.record("tensor_closed", "ab is an object",
                      M.tensor_obj(a, b) in objs, {"tuple": [str(a), str(b)]})
    if not report.passed:
        return report
    for a in objs:
        report.record("unit_strict", "1a = a = a1",
                      M.tensor_obj(unit, a) == a == M.tensor_obj(a, unit),
                      {"tuple": [str(a)]})
    for a, b, c in tuples(objs, 3):
        report.record("associative_objects", "(ab)c = a(bc)",
                      M.tensor_obj(M.tensor_obj(a, b), c) ==
                      M.tensor_obj(a, M.tensor_obj(b, c)),
                      {"tuple": [str(a), str(b), str(c)]})
    if not report.passed:
        return report

    # Shapes, unitality and identities.
    j_unit = C.ident(unit)
    for a, b in tuples(objs, 2):
        hom = C.hom(a, b)
        identity = base.identity(hom)
        left = base.tensor_mor(j_unit, identity).then(
            M.tensor_mor(unit, unit, a, b))
        right = base.tensor_mor(identity, j_unit).then(
            M.tensor_mor(a, b, unit, unit))
        report.compare("left_unitality", "(j_1 1)∘(−⊗−) = 1",
                       [str(a), str(b)], left, identity)
        report.compare("right_unitality", "(1 j_1)∘(−⊗−) = 1",
                       [str(a), str(b)], right, identity)
    for a, c in tuples(objs, 2):
        ac = M.tensor_obj(a, c)
        report.compare("identities", "(j_a j_c)∘(−⊗−) = j_{ac}",
                       [str(a), str(c)],
                       M.under_tensor(C.ident(a), C.ident(c), a, a, c, c),
                       C.ident(ac))

    # Associativity of the tensor.
    def associativity(key):
        a, b, c, d, e, f = key
        ac, bd = M.tensor_obj(a, c), M.tensor_obj(b, d)
        ce, df = M.tensor_obj(c, e), M.tensor_obj(d, f)
        left = base.tensor_mor(M.tensor_mor(a, b, c, d),
                               base.identity(C.hom(e, f))).then(
                                   M.tensor_mor(ac, bd, e, f))
        right = base.tensor_mor(base.identity(C.hom(a, b)),
                                M.tensor_mor(c, d, e, f)).then(
                                    M.tensor_mor(a, b, ce, df))
        return key, left, right

    six = _sample(tuples(objs, 6), sample, seed)
    for key, left, right in sweep(associativity, six,
                                  desc=f"{M.name} tensor associativity"):
        report.compare("tensor_associativity",
                       "(⊗ 1)∘⊗ = (1 ⊗)∘⊗", [str(x) for x in key],
                       left, right)

    # Braided interchange.
    def interchange(key):
        a, b, c, d, e, f = key
        ad, be, cf = (M.tensor_obj(a, d), M.tensor_obj(b, e),
                      M.tensor_obj(c, f))
        left = base.tensor_mor(M.tensor_mor(a, b, d, e),
                               M.tensor_mor(b, c, e, f)).then(
                                   C.comp(ad, be, cf))
        middle = base.tensor_mors(base.identity(C.hom(a, b)),
                                  braid(C.hom(d, e), C.hom(b, c)),
                                  base.identity(C.hom(e, f)))
        right = middle.then(base.tensor_mor(C.comp(a, b, c),
                                            C.comp(d, e, f))).then(
                                                M.tensor_mor(a, c, d, f))
        return key, left, right

    for key, left, right in sweep(interchange, six,
                                  desc=f"{M.name} braided interchange"):
        report.compare("braided_interchange",
                       "(⊗ ⊗)∘(−∘−) = (1 β 1)∘(∘ ∘)∘⊗",
                       [str(x) for x in key], left, right)
    logger.info("verify_vmonoidal(%s): %s over %d tuples.", M.name,
                report.verdict, len(six))
    return report


def close_under_tensor(objects: Sequence[Label],
                       product: Callable[[Label, Label], Label],
                       size: Callable[[Label], int],
                       dim_cap: int) -> List[Label]:
    """
    Close a list of objects under a strict product.

    Raises:
        CoverageGap: If the closure needs an object above the cap.
    """
    closed = list(dict.fromkeys(objects))
    seen = set(closed)
    frontier = list(closed)
    while frontier:
        fresh = []
        for x in list(closed):
            for y in frontier:
                for z in (product(x, y), product(y, x)):
                    if z in seen:
                        continue
                    if size(z) > dim_cap:
                        raise CoverageGap([str(z)],
                                          f"products within dimension "
                                          f"{dim_cap}")
                    seen.add(z)
                    fresh.append(z)
        closed.extend(fresh)
        frontier = fresh
    return closed


def self_enriched_monoidal(base: BaseCategory,
                           window: Sequence[GradedObject],
                           dim_cap: Optional[int] = None,
                           name: str = "Vhat") -> VMonoidalCategory:
    """
    V̂ as a V-monoidal category: uw -> vx on objects and
    −⊗_V̂− = β^{-1}_{u*v, w*} 1_x on homs V̂(u -> v)⊗V̂(w -> x).

    Args:
        base (BaseCategory): The base.
        window (list): Objects; closed under ⊗ (and the unit added).
        dim_cap (int): Cap on the closure (configuration default).
        name (str): Category label.

    Returns:
        VMonoidalCategory: The monoidal self-enrichment.
    """
    cap = dim_cap if dim_cap is not None else get_config().dim_cap
    objects = close_under_tensor([base.unit] + list(window), base.tensor_obj,
                                 lambda u: u.dim, cap)
    Vhat = self_enrichment(base, objects, name)

    def tensor_mor(u, v, w, x):
        return base.tensor_mor(
            base.braiding_inverse(base.internal_hom(u, v), base.dual_obj(w)),
            base.identity(x))

    return VMonoidalCategory(Vhat, base.unit, base.tensor_obj, tensor_mor,
                             name)


def trivial_monoidal(C: VCategory) -> VMonoidalCategory:
    """The one-object C with C(* -> *) = 1_V as a monoidal category."""
    if len(C.objects) != 1:
        raise ShapeMismatch("trivial_monoidal needs exactly one object.")
    star = C.objects[0]
    base = C.base
    if C.hom(star, star) != base.unit:
        raise ShapeMismatch("The endomorphism object must be 1_V.")
    return VMonoidalCategory(C, star, lambda a, b: star,
                             lambda a, b, c, d: base.identity(base.unit),
                             C.name)


def monoidal_complete(M: VMonoidalCategory,
                      window: Sequence[CompletionObject],
                      weights: Sequence[GradedObject] = (),
                      dim_cap: Optional[int] = None) -> VMonoidalCategory:
    """
    The monoidal completion: (a◀u)(c◀w) = ac◀uw and
    −⊗_C̄− = (β^{-1}_{u*C(a->b)v, w*} 1)
            ∘(1_{w*u*C(a->b)} β^{-1}_{v,C(c->d)} 1_x)
            ∘(1_{w*u*} (−⊗_C−) 1_{vx})
    on C̄(a◀u -> b◀v)⊗C̄(c◀w -> d◀x).

    Args:
        M (VMonoidalCategory): The category.
        window (list): CompletionObjects; closed under the product, the
            unit 1_C◀1_V added.
        weights (list): Weights the window is also closed under.
        dim_cap (int): Cap on weight dimensions (configuration default).

    Returns:
        VMonoidalCategory: C̄ with its monoidal structure.
    """
    base = M.base
    cap = dim_cap if dim_cap is not None else get_config().dim_cap
    unit = CompletionObject(M.unit, base.unit)

    def product(x, y):
        return CompletionObject(M.tensor_obj(x.base, y.base),
                                base.tensor_obj(x.weight, y.weight))

    start = complete(M.vcat, [unit] + list(window), weights, cap).objects
    closed = close_under_tensor(start, product, lambda x: x.weight.dim, cap)
    Cbar = CompletionCategory(M.vcat, closed, f"{M.name}bar")
    C = M.vcat

    def tensor_mor(x, y, z, t):
        a, u, b, v = x.base, x.weight, y.base, y.weight
        c, w, d, xw = z.base, z.weight, t.base, t.weight
        ident = base.identity
        c_ab, c_cd = C.hom(a, b), C.hom(c, d)
        u_dual, w_dual = base.dual_obj(u), base.dual_obj(w)
        step1 = base.tensor_mor(
            base.braiding_inverse(base.tensor_objs(u_dual, c_ab, v), w_dual),
            ident(base.tensor_obj(c_cd, xw)))
        step2 = base.tensor_mors(
            ident(base.tensor_objs(w_dual, u_dual, c_ab)),
            base.braiding_inverse(v, c_cd), ident(xw))
        step3 = base.tensor_mors(
            ident(base.tensor_obj(w_dual, u_dual)), M.tensor_mor(a, b, c, d),
            ident(base.tensor_obj(v, xw)))
        return step1.then(step2).then(step3)

    logger.info("Monoidal completion of %s on %d objects.", M.name,
                len(closed))
    return VMonoidalCategory(Cbar, unit, product, tensor_mor, Cbar.name)


class VMonoidalFunctor:
    """A strongly unital V-monoidal functor (F, ν).

    Attributes:
        functor (VFunctor): F with F(1_C) = 1_D.
        source (VMonoidalCategory): C.
        target (VMonoidalCategory): D.
        name (str): A label."""

    def __init__(self, functor: VFunctor, source: VMonoidalCategory,
                 target: VMonoidalCategory, nu, name: Optional[str] = None):
        self.functor = functor
        self.source = source
        self.target = target
        self.name = name or functor.name
        self._nu = nu if isinstance(nu, LazyTable) else \
            LazyTable(nu, "tensorators")

    def __call__(self, a: Label) -> Label:
        return self.functor(a)

    def nu(self, a: Label, b: Label) -> GradedMorphism:
        """ν_{a,b} ∈ D^V(F(ab) -> F(a)F(b))."""
        return self._nu.get(a, b)

    def override(self, nu: dict) -> "VMonoidalFunctor":
        """A copy with some tensorators replaced."""
        return VMonoidalFunctor(self.functor, self.source, self.target,
                                self._nu.overridden(nu), f"{self.name}'")


def verify_vmonoidal_functor(F: VMonoidalFunctor) -> Report:
    """
    Check (F, ν): V-functor axioms, F(1) = 1, ν_{a,1} = 1 = ν_{1,a},
    associativity of ν and naturality
    ((⊗_C)∘F ν)∘(−∘_D−) = (ν (F F)∘⊗_D)∘(−∘_D−).

    Args:
        F (VMonoidalFunctor): The functor.

    Returns:
        Report: The checks.
    """
    C, D = F.source, F.target
    base = C.base
    G = F.functor
    under = underlying(D.vcat)
    report = Report(f"vmonoidal_functor({F.name})")
    report.extend(verify_vfunctor(G))
    report.record("unit", "F(1_C) = 1_D", G(C.unit) == D.unit,
                  {"tuple": [str(C.unit)]})
    if not report.passed:
        return report
    objs = C.objects
    for a, b in tuples(objs, 2):
        nu = F.nu(a, b)
        ok = nu.domain == base.unit and nu.codomain == D.vcat.hom(
            G(C.tensor_obj(a, b)), D.tensor_obj(G(a), G(b)))
        report.record("nu_shape", "ν_{a,b}: F(ab) -> F(a)F(b)", ok,
                      {"tuple": [str(a), str(b)]})
    if not report.passed:
        return report
    for a in objs:
        Fa = G(a)
        report.compare("nu_right_unit", "ν_{a,1} = 1", [str(a)],
                       F.nu(a, C.unit), under.identity(Fa))
        report.compare("nu_left_unit", "ν_{1,a} = 1", [str(a)],
                       F.nu(C.unit, a), under.identity(Fa))
    for a, b, c in tuples(objs, 3):
        Fa, Fb, Fc = G(a), G(b), G(c)
        ab, bc = C.tensor_obj(a, b), C.tensor_obj(b, c)
        abc = C.tensor_obj(ab, c)
        end = D.tensor_objs(Fa, Fb, Fc)
        left = under.compose(
            F.nu(ab, c),
            D.under_tensor(F.nu(a, b), D.vcat.ident(Fc), G(ab),
                           D.tensor_obj(Fa, Fb), Fc, Fc),
            G(abc), D.tensor_obj(G(ab), Fc), end)
        right = under.compose(
            F.nu(a, bc),
            D.under_tensor(D.vcat.ident(Fa), F.nu(b, c), Fa, Fa, G(bc),
                           D.tensor_obj(Fb, Fc)),
            G(abc), D.tensor_obj(Fa, G(bc)), end)
        report.compare("nu_associativity", "ν_{ab,c}(ν 1) = ν_{a,bc}(1 ν)",
                       [str(a), str(b), str(c)], left, right)

    def naturality(key):
        a, b, c, d = key
        ac, bd = C.tensor_obj(a, c), C.tensor_obj(b, d)
        Fa, Fb, Fc, Fd = G(a), G(b), G(c), G(d)
        FbFd = D.tensor_obj(Fb, Fd)
        FaFc = D.tensor_obj(Fa, Fc)
        path1 = base.tensor_mor(
            C.tensor_mor(a, b, c, d).then(G.component(ac, bd)),
            F.nu(b, d)).then(D.vcat.comp(G(ac), G(bd), FbFd))
        path2 = base.tensor_mor(
            F.nu(a, c),
            base.tensor_mor(G.component(a, b), G.component(c, d)).then(
                D.tensor_mor(Fa, Fb, Fc, Fd))).then(
                    D.vcat.comp(G(ac), FaFc, FbFd))
        return key, path1, path2

    for key, left, right in sweep(naturality, tuples(objs, 4),
                                  desc=f"{F.name} ν naturality"):
        report.compare("nu_naturality", "ν is V-natural",
                       [str(x) for x in key], left, right)
    return report


def identity_monoidal_functor(M: VMonoidalCategory) -> VMonoidalFunctor:
    """1_C with identity tensorators."""
    return VMonoidalFunctor(identity_functor(M.vcat), M, M,
                            lambda a, b: M.vcat.ident(M.tensor_obj(a, b)),
                            f"1_{M.name}")


def monoidal_inclusion(M: VMonoidalCategory,
                       Mbar: VMonoidalCategory) -> VMonoidalFunctor:
    """I: C -> C̄ with ν^I_{a,b} = j_{ab◀1_V}."""
    I = inclusion_functor(M.vcat, Mbar.vcat)
    return VMonoidalFunctor(
        I, M, Mbar,
        lambda a, b: Mbar.vcat.ident(I(M.tensor_obj(a, b))), "I")


def monoidal_report(M: VMonoidalCategory, sample: Optional[int] = None,
                    seed: int = 0) -> Report:
    """verify_vcategory followed by verify_vmonoidal."""
    report = verify_vcategory(M.vcat)
    if report.passed:
        report.extend(verify_vmonoidal(M, sample=sample, seed=seed))
    return report
