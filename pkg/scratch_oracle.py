import time

from trigor.algebra import Algebra
from trigor.decompose import indecomposable_summands
from trigor.linalg import GF
from trigor.module import Morphism, regular_module, simple_module
from trigor.relgor import construct_special_precover, special_precover_check
from trigor.oracle import (
    WorkLimitError,
    enumerate_modules,
    enumerate_triangle_modules,
    exhaustive_check,
    registered_properties,
)
from trigor.trimat import (
    TriangleMorphism,
    _zero_module,
    build_T_theta,
    functor_r,
    special_precover_check as tri_precover,
)

F = GF(2)
A2 = Algebra.from_quiver(F, ["1", "2"], [("a", "1", "2")], name="A2")
DN = Algebra.from_quiver(F, ["v"], [("x", "v", "v")], [[(1, ["x", "x"])]], name="dual")
K1 = Algebra.from_quiver(F, ["pt"], [], name="k")

t0 = time.time()
mods = enumerate_modules(DN, (2,))
print("dual cap 2:", len(mods), [m.dims for m in mods], f"{time.time()-t0:.2f}s")
assert len(mods) == 4
assert mods[0].is_zero()

mods = enumerate_modules(A2, (1, 1))
print("A2 cap (1,1):", len(mods), [m.dims for m in mods])
assert len(mods) == 5

t0 = time.time()
mods22 = enumerate_modules(A2, (2, 2))
print("A2 cap (2,2):", len(mods22), f"{time.time()-t0:.2f}s")
assert len(mods22) == 14

for d in (1, 2, 3):
    mk = enumerate_modules(K1, (d,))
    assert len(mk) == d + 1, (d, len(mk))
print("semisimple law d+1: ok")

try:
    enumerate_modules(A2, (4, 4), max_candidates=10)
    raise SystemExit("expected WorkLimitError")
except WorkLimitError as e:
    print("refusal:", e)

tR = build_T_theta(DN)
t0 = time.time()
tris = enumerate_triangle_modules(tR, (1, 1))
print("T(dual) cap (1,1):", len(tris), f"{time.time()-t0:.2f}s")

t0 = time.time()
tris2 = enumerate_triangle_modules(tR, (2, 2))
print("T(dual) cap (2,2):", len(tris2), f"{time.time()-t0:.2f}s")

tA = build_T_theta(A2)
t0 = time.time()
trisA = enumerate_triangle_modules(tA, (1, 1, 1, 1))
print("T(A2) cap (1,1,1,1):", len(trisA), f"{time.time()-t0:.2f}s")

t0 = time.time()
trisA2 = enumerate_triangle_modules(tA, (2, 2, 2, 2), max_candidates=500000)
print("T(A2) cap (2,2,2,2):", len(trisA2), f"{time.time()-t0:.2f}s")

print("properties:", registered_properties())

for pid in registered_properties():
    t0 = time.time()
    out = exhaustive_check(pid, tR, (1, 1))
    print(f"  {out.summary()}  [{time.time()-t0:.2f}s]")
    assert out.passed, out.failures[:3]

t0 = time.time()
out = exhaustive_check("projective-injective-agreement", tA, (1, 1, 1, 1))
print(out.summary(), f"[{time.time()-t0:.2f}s]")
assert out.passed

# constructive special precover over T(dual): (S;0) has a certified syzygy
glued = indecomposable_summands(regular_module(tR.T))
S = simple_module(DN, 0)
S0 = functor_r(tR, S, _zero_module(tR.B)).flat()
f = construct_special_precover(S0, glued)
assert f is not None and f.target is S0 and f.is_surjective()
rep = special_precover_check(f, glued, glued)
print("constructed precover special:", rep.is_special_precover)
assert rep.is_special_precover

reg = regular_module(tR.T)
fid = construct_special_precover(reg, glued)
assert fid is not None and fid.source is reg

# broken map: second component not surjective, named failure expected
src = functor_r(tR, S, _zero_module(tR.B))
tgt = functor_r(tR, S, S)
bad = TriangleMorphism(
    src,
    tgt,
    Morphism.identity(S),
    Morphism.zero_map(_zero_module(tR.B), S),
)
famA = indecomposable_summands(regular_module(tR.A))
famB = indecomposable_summands(regular_module(tR.B))
brep = tri_precover(tR, bad, famA, famB, [S0], [S], [S])
assert not brep.corner_side
assert any("second" in msg and "not surjective" in msg for msg in brep.failures), brep.failures
print("broken map failures:", brep.failures)
print("oracle smoke done")
