"""Catalog of certificate corruptions the re-validator must reject.

Every entry builds its own certificate from scratch so that in-place matrix
tampering never leaks into cached resolutions shared by other tests: the
target module is constructed fresh (fresh identity, fresh caches), and
component modules are only ever replaced by reference, never edited.
"""

from trigor.fixtures import arrow_algebra, dual_numbers
from trigor.module import (
    projective_indecomposable,
    regular_module,
    simple_module,
)
from trigor.relgor import is_gc_projective


def _zero_out(mor):
    for m in mor.mats:
        z = m.field.zero()
        for r in m.rows:
            for j in range(len(r)):
                r[j] = z


def _flip_entry(mor, v=0, i=0, j=0):
    m = mor.mats[v]
    f = m.field
    m.rows[i][j] = f.add(m.rows[i][j], f.one())


def _periodic_cert(p=2):
    """Simple module over the dual numbers, components the regular module:
    periodic closure on both sides."""
    DN = dual_numbers(p)
    v = is_gc_projective(simple_module(DN, 0), [regular_module(DN)])
    assert v.status == "certified"
    return v.certificate


def _finite_cert(p=2):
    """First simple over the length-two path algebra, components its
    injectives: finite left closure, terminal right closure."""
    A2 = arrow_algebra(p)
    comps = [simple_module(A2, 0), projective_indecomposable(A2, 0)]
    v = is_gc_projective(simple_module(A2, 0), comps)
    assert v.status == "certified"
    return v.certificate


def _mut_nonprojective_term(c):
    c.left.terms[0] = simple_module(c.module.algebra, 0)


def _mut_flip_first_map(c):
    _flip_entry(c.left.maps[0])


def _mut_zero_first_map(c):
    _zero_out(c.left.maps[0])


def _mut_truncate_maps(c):
    c.left.maps = c.left.maps[:1]


def _mut_replace_syzygy(c):
    c.left.syzygies[0] = regular_module(c.module.algebra)


def _mut_bad_periodic_indices(c):
    c.left.closure_data = ("periodic", 0, c.left.closure_data[2])


def _mut_drop_left_iso(c):
    c.left.closure_iso = None


def _mut_zero_left_iso(c):
    _zero_out(c.left.closure_iso)


def _mut_shrink_ext_window(c):
    c.left.ext_checked_through = c.left.closure_data[-1] - 1


def _mut_bad_finite_index(c):
    c.left.closure_data = ("finite", 0)


def _mut_flip_stage_map(c):
    _flip_entry(c.right_stages[0].f)


def _mut_zero_stage_map(c):
    _zero_out(c.right_stages[0].f)


def _mut_break_chaining(c):
    c.right_stages[0].N = simple_module(c.module.algebra, 0)


def _mut_flip_coker(c):
    _flip_entry(c.right_stages[0].coker_proj)


def _mut_zero_epi(c):
    _zero_out(c.right_stages[0].epi_res)


def _mut_flip_mono(c):
    _flip_entry(c.right_stages[0].mono_res)


def _mut_pad_comp_indices(c):
    c.right_stages[0].comp_indices = list(c.right_stages[0].comp_indices) + [0]


def _mut_drop_right_iso(c):
    c.right_closure_iso = None


def _mut_fake_terminal(c):
    c.right_closure_kind = "terminal"


def _mut_swap_family(c):
    c.comps = [simple_module(c.module.algebra, 0)]


# (builder, corruption) pairs; the validator must reject every result.
MUTATIONS = [
    ("nonprojective-left-term", _periodic_cert, _mut_nonprojective_term),
    ("first-map-entry-flipped", _periodic_cert, _mut_flip_first_map),
    ("first-map-zeroed", _periodic_cert, _mut_zero_first_map),
    ("left-maps-truncated", _periodic_cert, _mut_truncate_maps),
    ("stored-syzygy-replaced", _periodic_cert, _mut_replace_syzygy),
    ("periodic-indices-corrupted", _periodic_cert, _mut_bad_periodic_indices),
    ("left-closing-iso-removed", _periodic_cert, _mut_drop_left_iso),
    ("left-closing-iso-zeroed", _periodic_cert, _mut_zero_left_iso),
    ("ext-window-shortened", _periodic_cert, _mut_shrink_ext_window),
    ("finite-closure-index-corrupted", _finite_cert, _mut_bad_finite_index),
    ("stage-map-entry-flipped", _periodic_cert, _mut_flip_stage_map),
    ("stage-map-zeroed", _periodic_cert, _mut_zero_stage_map),
    ("stage-chaining-broken", _periodic_cert, _mut_break_chaining),
    ("cokernel-entry-flipped", _periodic_cert, _mut_flip_coker),
    ("residual-epi-zeroed", _periodic_cert, _mut_zero_epi),
    ("residual-mono-flipped", _periodic_cert, _mut_flip_mono),
    ("component-indices-padded", _periodic_cert, _mut_pad_comp_indices),
    ("right-closing-iso-removed", _periodic_cert, _mut_drop_right_iso),
    ("terminal-with-residual", _periodic_cert, _mut_fake_terminal),
    ("component-family-swapped", _periodic_cert, _mut_swap_family),
]
