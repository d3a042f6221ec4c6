"""The ``hopfforge`` command line.

Sixteen subcommands over JSON inputs or named builtins, each emitting a
check report (text, or canonical JSON with --json) and exiting

    0  every check passed
    1  a mathematical check failed (including invalid input structures)
    2  usage, parse or schema problem
    3  an internal invariant broke mid-computation

Use --builtin NAME or --input PATH to choose the object; nerve-s3-id
additionally needs --allow-large.  HOPFFORGE_MAX_DIM (default 512) caps
the dimension of any constructed algebra.
"""

import argparse
import os
import sys

from . import __version__, fixtures, io
from .errors import (HopfForgeError, HypothesisFailed, InvalidCrossedModule,
                     InvalidGroup, NonInvertibleAntipode,
                     NonInvertibleBraiding, NotAProjection, UsageError)
from .linalg import LinMap, composite_map, format_rational, try_inverse
from .hopf import (GroupTable, HopfAlgebra, HopfProjection, check_hopf,
                   group_algebra, max_dim)
from .yd import (YDModule, check_braided_hopf, check_yd, projection_yd,
                 self_yd_module, yd_braiding, yd_pushforward)
from .radford import (bosonisation, induced_braided_hopf, kernel_generators,
                      kernel_sides_agree, radford_iso, rker)
from .report import Report
from .simplicial import (GroupCrossedModule, TruncatedSimplicialHopf,
                         check_fg_commutation, dim2_pipeline, extract_xmod,
                         identity_crossed_module, level3_restriction_probe,
                         level_rker, linearize, moore_group_oracle,
                         nerve_of_crossed_module, peiffer_pairing,
                         verify_simplicial)


# -- input plumbing -----------------------------------------------------


def _load(args):
    """The object named by --builtin/--input, or UsageError."""
    if getattr(args, "builtin", None):
        name = args.builtin
        if fixtures.builtin_is_large(name) and not args.allow_large:
            raise UsageError(
                f"builtin {name!r} has dim-216 levels; pass --allow-large")
        return fixtures.builtin_raw(name)
    if getattr(args, "input", None):
        return io.parse_definition(args.input).value
    raise UsageError("choose an object with --builtin NAME or --input PATH")


def _as_hopf(obj) -> HopfAlgebra:
    if isinstance(obj, GroupTable):
        return group_algebra(obj)
    if isinstance(obj, HopfAlgebra):
        return obj
    raise UsageError(f"{type(obj).__name__} is not a Hopf algebra; "
                     "give a hopf or group document")


def _as_projection(obj) -> HopfProjection:
    if not isinstance(obj, HopfProjection):
        raise UsageError(f"{type(obj).__name__} is not a Hopf projection; "
                         "give a projection document or proj-* builtin")
    return obj


def _as_simplicial(obj) -> TruncatedSimplicialHopf:
    if not isinstance(obj, TruncatedSimplicialHopf):
        raise UsageError(f"{type(obj).__name__} is not simplicial; "
                         "give a simplicial document or nerve-* builtin")
    return obj


def _as_crossed_module(obj) -> GroupCrossedModule:
    if isinstance(obj, GroupTable):
        return identity_crossed_module(obj)
    if not isinstance(obj, GroupCrossedModule):
        raise UsageError(f"{type(obj).__name__} is not a crossed module; "
                         "give a crossed_module document or a group builtin "
                         "(taken as (id: G -> G, conjugation))")
    return obj


def _nerve_depth_guard(x: GroupCrossedModule, depth: int, allow_large: bool):
    if allow_large:
        return
    cap = max_dim()
    order = x.n.order
    for k in range(1, depth + 1):
        order *= x.m.order
        if order > cap:
            raise UsageError(
                f"nerve level {k} would have order {order} > "
                f"HOPFFORGE_MAX_DIM={cap}; raise the cap or pass --allow-large")


def _projection_or_level(args):
    """A projection, either given directly or cut out of a simplicial level.

    With --level n (plus optional --face j, --degeneracy k) the pair
    (d_j, s_k) at level n of a simplicial input becomes the projection.
    """
    obj = _load(args)
    if isinstance(obj, TruncatedSimplicialHopf):
        if args.level is None:
            raise UsageError("a simplicial input needs --level N "
                             "(and optionally --face J / --degeneracy K)")
        t = obj
        n, j = args.level, args.face if args.face is not None else 0
        k = args.degeneracy if args.degeneracy is not None else max(j - 1, 0)
        if not 1 <= n <= t.depth:
            raise UsageError(f"--level must be in 1..{t.depth}")
        if not 0 <= j <= n:
            raise UsageError(f"--face must be in 0..{n}")
        if not 0 <= k <= n - 1:
            raise UsageError(f"--degeneracy must be in 0..{n - 1}")
        return HopfProjection(t.levels[n], t.levels[n - 1],
                              t.faces[n][j].lin, t.degens[n - 1][k].lin,
                              name=f"(d{j},s{k})@{n}")
    return _as_projection(obj)


# -- subcommand handlers (each returns a Report) --------------------------


def _cmd_check_hopf(args) -> Report:
    return check_hopf(_as_hopf(_load(args)))


def _cmd_check_yd(args) -> Report:
    obj = _load(args)
    if isinstance(obj, (GroupTable, HopfAlgebra)):
        v = self_yd_module(_as_hopf(obj))
    elif isinstance(obj, (HopfProjection, TruncatedSimplicialHopf)):
        v = projection_yd(_projection_or_level(args))
    elif isinstance(obj, YDModule):
        v = obj
    else:
        raise UsageError(f"{type(obj).__name__} does not define a "
                         "Yetter-Drinfeld module")
    rep = check_yd(v)
    braid = yd_braiding(v, v, require_invertible=False)
    rep.add("self-braiding-invertible", try_inverse(braid) is not None)
    return rep


def _cmd_rker(args) -> Report:
    p = _projection_or_level(args)
    rep = Report(f"rker {p.name}")
    sub = rker(p.proj, "right")
    rep.add("contains-unit", sub.contains_vector(p.big.unit.column(0)))
    agree = kernel_sides_agree(p.proj)
    rep.info("all-three-kernels-agree",
             "yes" if agree
             else "no; the right kernel is the one Radford's theorem uses")
    rep.derived["dim"] = sub.dim
    rep.derived["basis"] = [_basis_label(p.big.space, sub.inclusion.column(j))
                            for j in range(sub.dim)]
    return rep


def _basis_label(space, col) -> str:
    parts = []
    for i in sorted(col):
        c = format_rational(col[i])
        parts.append(space.label(i) if c == "1" else f"{c}*{space.label(i)}")
    return " + ".join(parts)


def _cmd_kernel_generators(args) -> Report:
    p = _projection_or_level(args)
    rep = Report(f"kernel-generators {p.name}")
    gen = kernel_generators(p)   # raises ClosureFailure when identities break
    I, big = p.big.space, p.big
    rep.add("f-idempotent", (gen.f @ gen.f) == gen.f)
    rep.add("g-absorbs-f", (gen.g @ gen.f) == gen.g)
    sub = rker(p.proj, "right")
    rep.equality("f-fixes-kernel", gen.f @ sub.inclusion, sub.inclusion)
    ip = p.incl.lin @ p.proj.lin
    rep.equality("f-g-convolution-is-unit",
                 composite_map(I, I, [big.comul, [gen.f, gen.g], big.mul]),
                 big.unit @ big.counit)
    rep.equality("f-ipar-convolution-is-identity",
                 composite_map(I, I, [big.comul, [gen.f, ip], big.mul]),
                 LinMap.identity(I))
    rep.derived["dim_kernel"] = sub.dim
    return rep


def _cmd_braided_hopf(args) -> Report:
    p = _projection_or_level(args)
    res = induced_braided_hopf(p)
    rep = Report(f"braided-hopf {p.name}")
    rep.extend(check_braided_hopf(res.braided))
    rep.derived["dim"] = res.subspace.dim
    return rep


def _cmd_bosonise(args) -> Report:
    p = _projection_or_level(args)
    res = induced_braided_hopf(p)
    boso = bosonisation(res.braided)
    rep = Report(f"bosonise {p.name}")
    rep.extend(check_hopf(boso))
    rep.derived["dim_kernel"] = res.subspace.dim
    rep.derived["dim_bosonisation"] = boso.dim
    return rep


def _cmd_radford_iso(args) -> Report:
    p = _projection_or_level(args)
    _, _, rep = radford_iso(p)
    return rep


def _cmd_pushforward(args) -> Report:
    # Interchange the kernel module up to the big algebra.  Pushing an
    # arbitrary module can break the Yetter-Drinfeld compatibility (the
    # adjoint module on the whole big algebra does, for either builtin
    # projection), so the command pushes the module the interchange is
    # for: the Radford kernel with its induced structure.
    p = _projection_or_level(args)
    small_mod = induced_braided_hopf(p).braided.carrier
    pushed = yd_pushforward(p, small_mod, name=f"{small_mod.name}^")
    rep = Report(f"pushforward {p.name}")
    rep.extend(check_yd(pushed))
    rep.equality("braiding-preserved",
                 yd_braiding(pushed, pushed), yd_braiding(small_mod, small_mod))
    rep.derived["dim"] = pushed.dim
    return rep


def _cmd_simplicial_check(args) -> Report:
    return verify_simplicial(_as_simplicial(_load(args)))


def _cmd_nerve(args) -> Report:
    x = _as_crossed_module(_load(args))
    depth = 3
    _nerve_depth_guard(x, depth, args.allow_large)
    nerve = nerve_of_crossed_module(x, depth=depth)
    rep = Report(f"nerve {x.name}")
    rep.add("nerve-constructed", True,
            detail="faces/degeneracies verified as homomorphisms")
    rep.derived["depth"] = nerve.depth
    rep.derived["level_orders"] = [lv.order for lv in nerve.levels]
    return rep


def _cmd_linearize(args) -> Report:
    obj = _load(args)
    if isinstance(obj, TruncatedSimplicialHopf):
        t = obj
    else:
        x = _as_crossed_module(obj)
        depth = 2
        _nerve_depth_guard(x, depth, args.allow_large)
        t = linearize(nerve_of_crossed_module(x, depth=depth))
    rep = Report(f"linearize {t.name}")
    rep.add("levels-linearized", True)
    rep.derived["level_dims"] = [lv.dim for lv in t.levels]
    if args.json:
        rep.derived["document"] = io.simplicial_to_json(t)
    return rep


def _cmd_pipeline(args) -> Report:
    t = _as_simplicial(_load(args))
    rep = Report(f"pipeline {t.name}")
    rep.extend(check_fg_commutation(t))
    rep.extend(dim2_pipeline(t).report)
    return rep


def _cmd_peiffer(args) -> Report:
    t = _as_simplicial(_load(args))
    return peiffer_pairing(t).report


def _cmd_extract_xmod(args) -> Report:
    t = _as_simplicial(_load(args))
    _, rep = extract_xmod(t)
    rep.derived["dims"] = {"A100": rep.derived["dim_A100"],
                           "A200": rep.derived["dim_A200"],
                           "A221": rep.derived["dim_A221"]}
    return rep


def _cmd_moore_oracle(args) -> Report:
    name = getattr(args, "builtin", None)
    if name in ("nerve-c2-id", "nerve-c2-trivial", "nerve-s3-id"):
        if fixtures.builtin_is_large(name) and not args.allow_large:
            raise UsageError(
                f"builtin {name!r} has dim-216 levels; pass --allow-large")
        return moore_group_oracle(fixtures.group_nerve(name),
                                  fixtures.crossed_module(
                                      name.removeprefix("nerve-")))
    x = _as_crossed_module(_load(args))
    _nerve_depth_guard(x, 2, args.allow_large)
    nerve = nerve_of_crossed_module(x, depth=2)
    return moore_group_oracle(nerve, x)


def _cmd_check_restriction(args) -> Report:
    return level3_restriction_probe(_as_simplicial(_load(args)))


_COMMANDS = {
    "check-hopf": (_cmd_check_hopf, "verify the Hopf axioms of an algebra"),
    "check-yd": (_cmd_check_yd, "verify a Yetter-Drinfeld module"),
    "rker": (_cmd_rker, "right kernel of a split projection"),
    "kernel-generators": (_cmd_kernel_generators,
                          "the f/g generator maps and their identities"),
    "braided-hopf": (_cmd_braided_hopf,
                     "braided Hopf structure on the kernel"),
    "bosonise": (_cmd_bosonise, "bosonisation (biproduct) of the kernel"),
    "radford-iso": (_cmd_radford_iso,
                    "isomorphism bosonisation(kernel) == the big algebra"),
    "pushforward": (_cmd_pushforward,
                    "interchange a YD module along a projection"),
    "simplicial-check": (_cmd_simplicial_check,
                         "verify the simplicial identities"),
    "nerve": (_cmd_nerve, "nerve of a group crossed module"),
    "linearize": (_cmd_linearize,
                  "group algebras of a nerve, optionally as JSON"),
    "pipeline": (_cmd_pipeline, "the level-2 kernel tower A1, A2, A2(2,1)"),
    "peiffer": (_cmd_peiffer, "Peiffer pairing, composite vs closed form"),
    "extract-xmod": (_cmd_extract_xmod,
                     "braided Hopf crossed module from a simplicial algebra"),
    "moore-oracle": (_cmd_moore_oracle,
                     "group-level Moore complex cross-check"),
    "check-restriction": (_cmd_check_restriction,
                          "probe the level-3 restriction obstruction"),
}

#: errors that mean "the mathematics of the input failed" -> exit 1
_MATH_ERRORS = (NotAProjection, NonInvertibleAntipode, NonInvertibleBraiding,
                InvalidGroup, InvalidCrossedModule, HypothesisFailed)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hopfforge",
        description="exact checks for Hopf algebras, Yetter-Drinfeld "
                    "modules, Radford kernels and simplicial towers")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    for name, (_, help_text) in _COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--builtin", metavar="NAME",
                        help="a built-in object: " +
                             ", ".join(fixtures.BUILTIN_NAMES))
        sp.add_argument("--input", metavar="PATH",
                        help="a JSON definition document")
        sp.add_argument("--json", action="store_true",
                        help="emit the canonical JSON report")
        sp.add_argument("--allow-large", action="store_true",
                        help="permit dim-216 levels (nerve-s3-id)")
        sp.add_argument("--level", type=int, default=None, metavar="N",
                        help="simplicial level to cut a projection from")
        sp.add_argument("--face", type=int, default=None, metavar="J",
                        help="face index d_J (with --level)")
        sp.add_argument("--degeneracy", type=int, default=None, metavar="K",
                        help="degeneracy index s_K (with --level)")
    return ap


def run_command(argv) -> Report:
    """Dispatch one subcommand; raises instead of exiting."""
    args = _parser().parse_args(argv)
    if not args.command:
        raise UsageError("no subcommand given; see hopfforge --help")
    handler, _ = _COMMANDS[args.command]
    return handler(args)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:          # argparse --help/--version or bad flags
        return int(e.code or 0)
    try:
        if not args.command:
            raise UsageError("no subcommand given; see hopfforge --help")
        rep = _COMMANDS[args.command][0](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _MATH_ERRORS as e:
        print(f"failed: {e}", file=sys.stderr)
        return 1
    except HopfForgeError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return 3
    except Exception as e:           # noqa: BLE001 - last-resort bucket
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    exit_code = 0 if rep.ok else 1
    if args.json:
        d = rep.to_dict(version=__version__)
        d["exit_code"] = exit_code
        sys.stdout.write(io.dump_json(d))
    else:
        print(rep.format_text())
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
