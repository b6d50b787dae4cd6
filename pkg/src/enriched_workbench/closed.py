"""closed.py

This file handles closedness of a V-monoidal category: right duals in
C^V, internal homs [a, -] with the adjunction
θ^a_{b,c}: C(ab -> c) -> C(b -> [a,c]), the Frobenius construction
[a, c] = a*c and the internal hom of a completion.
"""

# Get packages.
import logging
from dataclasses import dataclass
from typing import Dict, Optional

# User defined modules.
from enriched_workbench.base_category import GradedMorphism
from enriched_workbench.completion import CompletionObject
from enriched_workbench.enriched_core import (
    Label, LazyTable, VFunctor, invert_morphism, underlying,
    verify_vadjunction, verify_vfunctor)
from enriched_workbench.errors import ClosednessDataMissing, CoverageGap
from enriched_workbench.reports import Report
from enriched_workbench.utils import tuples
from enriched_workbench.vmonoidal import VMonoidalCategory

# Set up logging.
logger = logging.getLogger(__name__)


@dataclass
class DualityData:
    """Right duals in C^V.

    Attributes:
        monoidal (VMonoidalCategory): C.
        dual (dict): a -> a*.
        coev (dict): a -> coev_a ∈ C^V(1_C -> a*a).
        ev (dict): a -> ev_a ∈ C^V(aa* -> 1_C)."""
    monoidal: VMonoidalCategory
    dual: Dict[Label, Label]
    coev: Dict[Label, GradedMorphism]
    ev: Dict[Label, GradedMorphism]

    def __post_init__(self):
        missing = [str(a) for a in self.monoidal.objects
                   if a not in self.dual or a not in self.coev
                   or a not in self.ev]
        if missing:
            raise ClosednessDataMissing(
                f"No dual data for objects {missing}.")

    def verify(self) -> Report:
        """Both zigzag identities in C^V for every object."""
        M = self.monoidal
        C = M.vcat
        under = underlying(C)
        unit = M.unit
        report = Report(f"duals({M.name})")
        for a in M.objects:
            ad = self.dual[a]
            aad = M.tensor_obj(a, ad)
            ada = M.tensor_obj(ad, a)
            aada = M.tensor_obj(aad, a)
            adaad = M.tensor_obj(ada, ad)
            # a -> a a* a -> a
            first = M.under_tensor(C.ident(a), self.coev[a], a, a, unit, ada)
            second = M.under_tensor(self.ev[a], C.ident(a), aad, unit, a, a)
            report.compare("zigzag_left", "(1_a coev_a)∘(ev_a 1_a) = 1_a",
                           [str(a)],
                           under.compose(first, second, a, aada, a),
                           under.identity(a))
            # a* -> a* a a* -> a*
            first = M.under_tensor(self.coev[a], C.ident(ad), unit, ada, ad,
                                   ad)
            second = M.under_tensor(C.ident(ad), self.ev[a], ad, ad, aad,
                                    unit)
            report.compare("zigzag_right",
                           "(coev_a 1_a*)∘(1_a* ev_a) = 1_a*", [str(a)],
                           under.compose(first, second, ad, adaad, ad),
                           under.identity(ad))
        return report


class ClosedStructure:
    """Internal homs of a V-monoidal category.

    Attributes:
        monoidal (VMonoidalCategory): C.
        name (str): A label."""

    def __init__(self, monoidal: VMonoidalCategory, internal, theta,
                 hom_functor, name: str = "[-,-]"):
        self.monoidal = monoidal
        self.name = name
        self._internal = LazyTable(internal, "internal homs")
        self._theta = LazyTable(theta, "closedness isomorphisms")
        self._functor = LazyTable(hom_functor, "internal hom components")

    def internal(self, a: Label, c: Label) -> Label:
        """[a, c]."""
        return self._internal.get(a, c)

    def theta(self, a: Label, b: Label, c: Label) -> GradedMorphism:
        """θ^a_{b,c}: C(ab -> c) -> C(b -> [a,c])."""
        return self._theta.get(a, b, c)

    def hom_functor(self, a: Label, b: Label, c: Label) -> GradedMorphism:
        """[a, -]_{b->c}: C(b -> c) -> C([a,b] -> [a,c])."""
        return self._functor.get(a, b, c)

    def left_functor(self, a: Label) -> VFunctor:
        """a ⊗ -, with components (j_a 1)∘(−⊗−)."""
        M = self.monoidal
        C, base = M.vcat, M.base

        def component(b, c):
            return base.tensor_mor(C.ident(a),
                                   base.identity(C.hom(b, c))).then(
                                       M.tensor_mor(a, a, b, c))

        return VFunctor(C, C, lambda b: M.tensor_obj(a, b), component,
                        f"{a}⊗-")

    def right_functor(self, a: Label) -> VFunctor:
        """[a, -]."""
        C = self.monoidal.vcat
        return VFunctor(C, C, lambda c: self.internal(a, c),
                        lambda b, c: self.hom_functor(a, b, c), f"[{a},-]")


def verify_closed(closed: ClosedStructure, objects=None) -> Report:
    """
    For each a: [a, -] is a V-functor and a ⊗ - -| [a, -] with θ^a.

    Args:
        closed (ClosedStructure): The internal homs.
        objects (list): The objects a to check (all by default).

    Returns:
        Report: The checks.

    Raises:
        CoverageGap: If some ab or [a, c] leaves the object set.
    """
    M = closed.monoidal
    objs = M.objects if objects is None else objects
    report = Report(f"closed({M.name})")
    for a in objs:
        missing = sorted({str(z) for b in M.objects
                          for z in (M.tensor_obj(a, b),
                                    closed.internal(a, b))
                          if z not in M.vcat})
        if missing:
            raise CoverageGap(
                missing, f"objects a⊗- and [a,-] reach from {a}")
        R = closed.right_functor(a)
        L = closed.left_functor(a)
        report.extend(verify_vfunctor(R))
        report.extend(verify_vadjunction(
            L, R, lambda b, c, a=a: closed.theta(a, b, c)))
    logger.info("verify_closed(%s): %s.", M.name, report.verdict)
    return report


def frobenius_closed_structure(duals: DualityData) -> ClosedStructure:
    """
    [a, c] = a*c with
    θ^a_{b,c} = ((coev_a j_b)∘⊗ ⊗ (j_{a*} 1)∘⊗)∘(−∘−).

    Args:
        duals (DualityData): Right duals.

    Returns:
        ClosedStructure: The internal homs.
    """
    M = duals.monoidal
    C, base = M.vcat, M.base

    def internal(a, c):
        return M.tensor_obj(duals.dual[a], c)

    def hom_functor(a, b, c):
        ad = duals.dual[a]
        return base.tensor_mor(C.ident(ad), base.identity(C.hom(b, c))).then(
            M.tensor_mor(ad, ad, b, c))

    def theta(a, b, c):
        ad = duals.dual[a]
        ada = M.tensor_obj(ad, a)
        ab = M.tensor_obj(a, b)
        adab = M.tensor_obj(ada, b)
        point = M.under_tensor(duals.coev[a], C.ident(b), M.unit, ada, b, b)
        push = hom_functor(a, ab, c)
        return base.tensor_mor(point, push).then(
            C.comp(b, adab, internal(a, c)))

    return ClosedStructure(M, internal, theta, hom_functor, "[a,c]=a*c")


def self_enriched_duals(Vhat: VMonoidalCategory) -> DualityData:
    """u* with coev and ev of V named as points of V̂."""
    base = Vhat.base
    dual, coev, ev = {}, {}, {}
    for u in Vhat.objects:
        dual[u] = base.dual_obj(u)
        coev[u] = base.name_of(base.coev(u))
        ev[u] = base.name_of(base.ev(u))
    return DualityData(Vhat, dual, coev, ev)


def trivial_closed_structure(M: VMonoidalCategory) -> ClosedStructure:
    """[*, *] = * on a one-object category whose endomorphisms are 1_V."""
    C, base = M.vcat, M.base
    star = M.unit
    return ClosedStructure(
        M, lambda a, c: star,
        lambda a, b, c: base.identity(C.hom(star, star)),
        lambda a, b, c: base.identity(C.hom(star, star)), "[*,*]=*")


def require_closed(closed: Optional[ClosedStructure]) -> ClosedStructure:
    """Refuse to go on without closedness data."""
    if closed is None:
        raise ClosednessDataMissing(
            "This construction needs internal homs or duals.")
    return closed


def completion_closed_structure(Mbar: VMonoidalCategory,
                                closed: ClosedStructure) -> ClosedStructure:
    """
    Internal homs of C̄ from those of C: [a◀u, c◀w] = [a,c]◀u*w and
    θ̄ = 1_{v*} ((1_{u*} θ^a_{b,c})∘β^{-1}_{u*,C(b->[a,c])}) 1_w.

    Args:
        Mbar (VMonoidalCategory): The monoidal completion.
        closed (ClosedStructure): Internal homs of the source category.

    Returns:
        ClosedStructure: The internal homs of C̄.
    """
    base = Mbar.base
    C = closed.monoidal.vcat

    def internal(x, z):
        return CompletionObject(
            closed.internal(x.base, z.base),
            base.tensor_obj(base.dual_obj(x.weight), z.weight))

    def theta(x, y, z):
        a, u = x.base, x.weight
        b, v = y.base, y.weight
        c, w = z.base, z.weight
        u_dual = base.dual_obj(u)
        inner = base.tensor_mor(base.identity(u_dual),
                                closed.theta(a, b, c)).then(
                                    base.braiding_inverse(
                                        u_dual,
                                        C.hom(b, closed.internal(a, c))))
        return base.tensor_mors(base.identity(base.dual_obj(v)), inner,
                                base.identity(w))

    def hom_functor(x, y, z):
        a, u = x.base, x.weight
        b, v = y.base, y.weight
        c, w = z.base, z.weight
        u_dual = base.dual_obj(u)
        H = C.hom(closed.internal(a, b), closed.internal(a, c))
        inner = closed.hom_functor(a, b, c).then(
            base.tensor_mor(base.coev(u_dual), base.identity(H))).then(
                base.tensor_mor(base.identity(u),
                                base.braiding_inverse(u_dual, H)))
        return base.tensor_mors(base.identity(base.dual_obj(v)), inner,
                                base.identity(w))

    return ClosedStructure(Mbar, internal, theta, hom_functor,
                           f"{closed.name} completed")


def completion_internal_hom(Mbar: VMonoidalCategory,
                            closed: ClosedStructure, x: CompletionObject,
                            z: CompletionObject):
    """
    [x, z] in C̄, with its adjunction checked against x ⊗ -.

    Args:
        Mbar (VMonoidalCategory): The monoidal completion.
        closed (ClosedStructure): Internal homs of the source category.
        x (CompletionObject): a◀u.
        z (CompletionObject): c◀w.

    Returns:
        tuple: ([x, z], the completed ClosedStructure, Report).
    """
    bar = completion_closed_structure(Mbar, closed)
    obj = bar.internal(x, z)
    report = verify_closed(bar, [x])
    under = underlying(Mbar.vcat)
    for t in Mbar.objects:
        lhs = under.dim(Mbar.tensor_obj(x, t), z)
        rhs = under.dim(t, obj)
        report.record("representability_count",
                      "dim C̄^V(x t -> z) = dim C̄^V(t -> [x,z])",
                      lhs == rhs,
                      {"tuple": [str(x), str(t), str(z)],
                       "dims": [lhs, rhs]})
    return obj, bar, report


def theta_is_invertible(closed: ClosedStructure) -> Report:
    """θ^a_{b,c} invertible for all triples."""
    M = closed.monoidal
    report = Report(f"theta({M.name})")
    for a, b, c in tuples(M.objects, 3):
        report.record("theta_invertible", "θ^a_{b,c} is invertible",
                      invert_morphism(M.base, closed.theta(a, b, c))
                      is not None, {"tuple": [str(a), str(b), str(c)]})
    return report

