"""Radford's theorem: categorical kernels, the braided Hopf algebra they
carry, bosonisation, and the explicit isomorphism.

Given a Hopf algebra projection (par: I -> H, i) the right kernel
B = RKer(par) = {v : sum v' (x) par(v'') = v (x) 1} is not a sub-Hopf
algebra of I, but it becomes a braided Hopf algebra in YD(H) once the
coproduct and antipode are replaced by

    comul_B = (f (x) id) . comul,     antipode_B = g,

where f = mul.(id (x) i par S).comul and g = mul.(i par (x) S).comul are
the kernel generator maps.  Bosonisation then rebuilds an ordinary Hopf
algebra B (x)^ H, and Psi/Phi exhibit I ~ B (x)^ H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClosureFailure, IsoFailure
from .hopf import HopfAlgebra, HopfMorphism, HopfProjection, check_morphism
from .linalg import (SCALAR, LinMap, Subspace, composite_map, flip,
                     full_subspace, iso_map, kernel_basis, left_unitor,
                     right_unitor, tensor_space, tensor_subspace)
from .report import Report
from .yd import (BraidedHopfAlgebra, YDModule, projection_yd, smash_product)


def rker(omega: HopfMorphism, side: str = "right") -> Subspace:
    """The right/left/categorical kernel of a Hopf algebra morphism.

    right:        {v : sum v' (x) omega(v'')          = v (x) 1}
    left:         {v : sum omega(v') (x) v''          = 1 (x) v}
    categorical:  {v : sum v' (x) omega(v'') (x) v''' = sum v' (x) 1 (x) v''}

    The three agree when everything is cocommutative but differ in general;
    the basis is the deterministic reduced kernel basis.
    """
    i, h, f = omega.src, omega.dst, omega.lin
    I, H = i.space, h.space
    if side == "right":
        lhs = composite_map(I, tensor_space(I, H), [i.comul, [I, f]])
        rhs = composite_map(I, tensor_space(I, H),
                            [right_unitor(I), [I, h.unit]])
    elif side == "left":
        lhs = composite_map(I, tensor_space(H, I), [i.comul, [f, I]])
        rhs = composite_map(I, tensor_space(H, I),
                            [left_unitor(I), [h.unit, I]])
    elif side == "categorical":
        cod = tensor_space(I, H, I)
        lhs = composite_map(I, cod, [i.comul, [i.comul, I], [I, f, I]])
        rhs = composite_map(I, cod,
                            [i.comul, [I, left_unitor(I)], [I, h.unit, I]])
    else:
        raise ValueError("side must be right, left or categorical")
    return kernel_basis(lhs - rhs)


def kernel_sides_agree(omega: HopfMorphism) -> bool:
    """True iff RKer == LKer == CKer as subspaces."""
    r = rker(omega, "right")
    return r.equals(rker(omega, "left")) and r.equals(rker(omega, "categorical"))


@dataclass
class KernelGenerators:
    """f = mul.(id (x) i par S).comul and g = mul.(i par (x) S).comul on I."""
    f: LinMap
    g: LinMap


def kernel_generators(p: HopfProjection) -> KernelGenerators:
    """The two generator maps, with their algebraic identities verified:
    f.f == f, g.f == g, and sum f(v') i(par(v'')) == v."""
    i = p.big
    I = i.space
    ipar = p.incl.lin @ p.proj.lin
    f = composite_map(I, I, [i.comul, [I, ipar @ i.antipode], i.mul])
    g = composite_map(I, I, [i.comul, [ipar, i.antipode], i.mul])
    sq = tensor_space(I, I)
    if (f @ f) != f:
        raise ClosureFailure(f"{p.name}: f is not idempotent")
    if (g @ f) != g:
        raise ClosureFailure(f"{p.name}: g.f != g")
    recon = composite_map(I, I, [i.comul, [f, ipar], i.mul])
    if recon != LinMap.identity(I):
        raise ClosureFailure(f"{p.name}: sum f(v')i(par(v'')) != v")
    return KernelGenerators(f, g)


@dataclass
class RKerResult:
    """B = RKer(par) with its inclusion, braided Hopf structure and the
    generator maps of the projection that produced it."""
    subspace: Subspace
    braided: BraidedHopfAlgebra
    generators: KernelGenerators
    f_cor: LinMap   # f corestricted, I -> B
    g_cor: LinMap   # g corestricted, I -> B


def induced_braided_hopf(p: HopfProjection, name: str = None) -> RKerResult:
    """Radford's braided Hopf algebra on B = RKer(par).

    Product, unit and the projection-induced YD structure restrict from I;
    the coproduct is (f (x) id).comul and the antipode is g.  Every
    restriction is a corestriction onto the kernel subspace, so escaping B
    raises ClosureFailure (which would signal inconsistent input).
    """
    name = name or f"RKer({p.proj.name})"
    big, small = p.big, p.small
    I, H = big.space, small.space
    b = rker(p.proj, "right")
    gen = kernel_generators(p)
    incl = b.inclusion

    f_cor = b.corestrict(gen.f, what="f")
    g_cor = b.corestrict(gen.g, what="g")

    mul = b.corestrict(big.mul @ incl.tensor(incl), what="mul")
    unit = b.corestrict(big.unit, what="unit")
    counit = big.counit @ incl
    bb = tensor_subspace(b, b)
    comul_on_i = composite_map(I, tensor_space(I, I),
                               [big.comul, [gen.f, I]])
    comul = bb.corestrict(comul_on_i @ incl, what="comul")
    antipode = b.corestrict(gen.g @ incl, what="antipode")

    ydi = projection_yd(p)
    action = b.corestrict(
        ydi.action @ LinMap.identity(H).tensor(incl), what="action")
    hb = tensor_subspace(full_subspace(H), b)
    coaction = hb.corestrict(ydi.coaction @ incl, what="coaction")
    carrier = YDModule(small, b.space, action, coaction, name=name)

    braided = BraidedHopfAlgebra(carrier, mul, unit, comul, counit, antipode,
                                 name=name)
    return RKerResult(b, braided, gen, f_cor, g_cor)


def bosonisation(a: BraidedHopfAlgebra) -> HopfAlgebra:
    """The ordinary Hopf algebra A (x)^ H built from A in YD(H).

    product   (a (x) x)(b (x) y) = sum (a x'|>b) (x) x''y   (smash product)
    coproduct sum a_(1) (x) (a_(2))_H x' (x) (a_(2))_A (x) x''
    antipode  sum (1 (x) S(a_H x)) (S_A(a_A) (x) 1)

    The antipode threads the coaction through the H-leg; with a trivial
    coaction it collapses to (1 (x) S(x))(S_A(a) (x) 1).  The twisted form
    is the unique convolution inverse of the identity for this coproduct
    (the collapsed form fails the antipode axiom whenever the coaction is
    non-trivial, e.g. on the quantum line).
    """
    h = a.over
    A, H = a.space, h.space
    phi = a.carrier.coaction
    sm = smash_product(h, a, a.carrier.action, upgrade="algebra")
    space = sm.space
    comul = composite_map(space, tensor_space(space, space), [
        [a.comul, h.comul],
        [A, phi, H, H],
        [A, H, flip(A, H), H],
        [A, h.mul, A, H],
    ])
    counit = composite_map(space, SCALAR,
                           [[a.counit, h.counit],
                            iso_map(tensor_space(SCALAR, SCALAR), SCALAR)])
    into_a = composite_map(A, space, [right_unitor(A), [A, h.unit]])
    into_h = composite_map(H, space, [left_unitor(H), [a.unit, H]])
    antipode = composite_map(space, space, [
        [phi, H], [H, flip(A, H)], [h.mul, A],
        [h.antipode, a.antipode], [into_h, into_a], sm.mul])
    return HopfAlgebra(space, sm.mul, sm.unit, comul, counit, antipode,
                       name=f"boso({a.name},{h.name})")


def radford_iso(p: HopfProjection, result: RKerResult = None):
    """Psi: v -> sum f(v') (x) par(v'') and Phi: a (x) x -> a i(x).

    Returns (psi, phi, report).  The two composites must be exact
    identities (IsoFailure otherwise); the report additionally records the
    Hopf-morphism checks of Psi into the bosonisation.
    """
    if result is None:
        result = induced_braided_hopf(p)
    big = p.big
    I = big.space
    boso = bosonisation(result.braided)
    b = result.subspace
    psi = composite_map(I, boso.space,
                        [big.comul, [result.f_cor, p.proj.lin]])
    phi = composite_map(boso.space, I,
                        [[b.inclusion, p.incl.lin], big.mul])

    rep = Report(f"radford-iso {p.name}")
    for nm, got, want in (("phi-psi-is-identity", phi @ psi,
                           LinMap.identity(I)),
                          ("psi-phi-is-identity", psi @ phi,
                           LinMap.identity(boso.space))):
        rep.equality(nm, got, want)
        if rep.checks[-1].status == "fail":
            w = rep.checks[-1].witness
            raise IsoFailure(f"{p.name}: {nm} fails at "
                             f"row {w['row']!r}, col {w['col']!r}: "
                             f"{w['lhs']} != {w['rhs']}")
    rep.extend(check_morphism(HopfMorphism(big, boso, psi, name="psi")),
               prefix="psi/")
    rep.derived["dim_kernel"] = b.dim
    rep.derived["dim_bosonisation"] = boso.dim
    return psi, phi, rep
