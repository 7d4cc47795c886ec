import json
from random import Random

import pytest

import util
import worked_examples as ex
from hookkron.errors import (
    InvalidCocornerError,
    NotAddableError,
    NotInnerCornerError,
    NotRemmelWhitneyError,
    NotRemovableError,
)
from hookkron.lr import lr_coefficient
from hookkron.pictures import (
    Picture,
    addable_cocorners,
    enumerate_pictures,
    picture_bump_destination,
    picture_delete,
    picture_from_json,
    picture_insert,
    picture_to_json,
    picture_to_rw,
    removable_corners,
    render_picture,
    rw_to_picture,
)
from hookkron.shapes import icc_bar, partitions, skew, transpose_shape
from hookkron.tableaux import PartialTableau, bump_destination, row_reading


class TestPictureValidation:
    def test_rejects_non_picture_bijection(self):
        source = skew((2,), ())
        target = skew((1, 1), ())
        with pytest.raises(ValueError):
            Picture(source, target, {(1, 1): (1, 1), (1, 2): (2, 1)})

    def test_rejects_wrong_domain(self):
        with pytest.raises(ValueError):
            Picture(skew((1,), ()), skew((1,), ()), {(2, 1): (1, 1)})

    def test_identity_on_single_cell(self):
        p = Picture(skew((1,), ()), skew((1,), ()), {(1, 1): (1, 1)})
        assert p[(1, 1)] == (1, 1)


class TestRemmelWhitneyCorrespondence:
    def test_worked_example_tableau_is_rw(self, example_tableau, example_reading):
        target = skew(ex.BIG_OUTER, ex.TARGET_INNER)
        p = rw_to_picture(example_tableau, example_reading, target)
        assert dict(p.pairs()) == ex.LAMBDA_MAP

    def test_round_trip_through_reading(self, example_picture, example_reading):
        t = picture_to_rw(example_picture, example_reading)
        assert t == PartialTableau(skew(ex.T_OUTER, ex.T_INNER), ex.T_ENTRIES)
        assert rw_to_picture(t, example_reading, example_picture.target) == example_picture

    def test_single_cell(self):
        t = PartialTableau(skew((1,), ()), {(1, 1): 1})
        p = rw_to_picture(t, {(1, 1): 1}, skew((1,), ()))
        assert p[(1, 1)] == (1, 1)
        assert picture_to_rw(p, {(1, 1): 1}) == t

    def test_perturbed_tableau_rejected(self, example_reading):
        # swapping the two largest entries keeps a valid tableau but breaks
        # the adjacency condition for the top two target cells
        entries = dict(ex.T_ENTRIES)
        entries[(4, 3)], entries[(3, 4)] = 11, 10
        t = PartialTableau(skew(ex.T_OUTER, ex.T_INNER), entries)
        with pytest.raises(NotRemmelWhitneyError):
            rw_to_picture(t, example_reading, skew(ex.BIG_OUTER, ex.TARGET_INNER))

    def test_image_mismatch_rejected(self, example_reading):
        entries = {c: v + 100 for c, v in ex.T_ENTRIES.items()}
        t = PartialTableau(skew(ex.T_OUTER, ex.T_INNER), entries)
        with pytest.raises(NotRemmelWhitneyError):
            rw_to_picture(t, example_reading, skew(ex.BIG_OUTER, ex.TARGET_INNER))

    def test_row_reading_round_trip_on_enumerated(self):
        for source, target in [
            (skew((3, 1), (1,)), skew((2, 2), (1,))),
            (skew((2, 2, 1), ()), skew((3, 2), ())),
        ]:
            reading = row_reading(target)
            for p in enumerate_pictures(source, target):
                assert rw_to_picture(picture_to_rw(p, reading), reading, target) == p


class TestEnumeration:
    def test_contains_worked_example(self, example_picture):
        pics = enumerate_pictures(skew(ex.T_OUTER, ex.T_INNER), example_picture.target)
        assert example_picture in pics

    def test_trivial_counts(self):
        assert len(enumerate_pictures(skew((), ()), skew((), ()))) == 1
        assert len(enumerate_pictures(skew((2,), ()), skew((1, 1), ()))) == 0
        assert len(enumerate_pictures(skew((2,), ()), skew((2,), ()))) == 1

    def test_size_mismatch_gives_nothing(self):
        assert enumerate_pictures(skew((2,), ()), skew((3,), ())) == []

    def test_deterministic_order(self):
        source, target = skew((2, 1), ()), skew((2, 1), ())
        first = enumerate_pictures(source, target)
        second = enumerate_pictures(source, target)
        assert first == second

    def test_against_brute_force(self):
        shapes = util.small_skew_shapes(max_outer=4, max_cells=4)
        for source in shapes:
            for target in shapes:
                if source.size != target.size or source.size > 4:
                    continue
                expected = util.brute_force_picture_maps(source, target)
                got = enumerate_pictures(source, target)
                assert len(got) == len(expected)
                assert {tuple(sorted(m.items())) for m in expected} == {
                    tuple(sorted(p.pairs())) for p in got
                }

    def test_count_formula_with_skew_source(self):
        # picture count = sum over middle shapes of the product of the two
        # restriction coefficients; checked on genuinely skew sources
        cases = [
            (skew((3, 2), (1,)), skew((3, 2), (1,))),
            (skew((3, 1, 1), (1,)), skew((2, 2, 1), (1,))),
            (skew((4, 2), (2,)), skew((3, 2, 1), (2,))),
        ]
        for source, target in cases:
            m = source.size
            total = sum(
                lr_coefficient(target.outer, target.inner, xi)
                * lr_coefficient(source.outer, source.inner, xi)
                for xi in partitions(m)
            )
            assert len(enumerate_pictures(source, target)) == total


class TestPictureBumping:
    def test_worked_example_destination(self, example_picture):
        destination, route = picture_bump_destination(example_picture, (2, 3))
        assert destination == (2, 3)
        assert route.cells == ((4, 2), (3, 3), (2, 3))
        assert route.displaced[0] == (2, 3)

    def test_invalid_cocorner(self, example_picture):
        with pytest.raises(InvalidCocornerError):
            picture_bump_destination(example_picture, (1, 1))

    def test_single_cell_matches_tableau(self):
        p = Picture(skew((2,), (1,)), skew((2,), (1,)), {(1, 2): (1, 2)})
        destination, _ = picture_bump_destination(p, (1, 1))
        # reading extended over the new cell: (1,1) sits below (1,2)
        extended = {(1, 1): 1, (1, 2): 2}
        t = picture_to_rw(p, extended)
        assert destination == bump_destination(t, extended[(1, 1)]).destination
        assert destination == (1, 1)

    def test_max_cocorner_matches_tableau(self):
        # the southwest-largest boundary cell extends the row reading by the
        # top value, so the tableau route must agree cell for cell
        for source, target in [
            (skew((3, 2), (1,)), skew((3, 2), (1,))),
            (skew((2, 2, 1), ()), skew((3, 2), ())),
            (skew((3, 1, 1), (1,)), skew((2, 2, 1), (1,))),
        ]:
            boundary = icc_bar(target)
            if not boundary:
                continue
            z = boundary[-1]
            for p in enumerate_pictures(source, target):
                destination, route = picture_bump_destination(p, z)
                reading = row_reading(target)
                t = picture_to_rw(p, reading)
                tab_route = bump_destination(t, target.size + 1)
                assert route.cells == tab_route.cells
                assert destination == tab_route.destination

    def test_route_independent_of_reading(self):
        rng = Random(23)
        for source, target in [
            (skew((3, 2), (1,)), skew((3, 2), (1,))),
            (skew((3, 1, 1), (1,)), skew((2, 2, 1), (1,))),
        ]:
            for p in enumerate_pictures(source, target):
                for z in icc_bar(target):
                    _, route = picture_bump_destination(p, z)
                    for _ in range(3):
                        reading = util.random_reading(rng, target.cells() + (z,))
                        t = picture_to_rw(p, reading)
                        assert bump_destination(t, reading[z]).cells == route.cells


class TestPictureInsertDelete:
    def test_worked_insert(self, example_picture):
        grown = picture_insert(example_picture, (2, 3))
        assert grown.source == skew((5, 5, 4, 3), (4, 2, 2))
        assert grown.target == skew((5, 5, 4, 2, 1), (3, 2, 2, 1))
        assert dict(grown.pairs()) == ex.E23_LAMBDA_MAP

    def test_worked_delete(self, example_picture):
        shrunk, out = picture_delete(example_picture, (3, 3))
        assert out == (3, 3)
        assert shrunk.source == skew((5, 5, 4, 3), (4, 3, 3))
        assert shrunk.target == skew((5, 5, 4, 2, 1), (3, 3, 3, 1))
        assert dict(shrunk.pairs()) == ex.F33_LAMBDA_MAP

    def test_delete_then_insert_restores(self, example_picture):
        shrunk, out = picture_delete(example_picture, (3, 3))
        assert picture_insert(shrunk, out) == example_picture

    def test_insert_then_delete_restores(self, example_picture):
        destination, _ = picture_bump_destination(example_picture, (2, 3))
        grown = picture_insert(example_picture, (2, 3))
        back, out = picture_delete(grown, destination)
        assert back == example_picture and out == (2, 3)

    def test_insert_at_extreme_rejected(self, example_picture):
        with pytest.raises(NotAddableError):
            picture_insert(example_picture, (5, 0))

    def test_delete_needs_inner_corner(self, example_picture):
        with pytest.raises(NotInnerCornerError):
            picture_delete(example_picture, (1, 1))

    def test_some_enumerated_corner_is_not_removable(self):
        from hookkron.shapes import inner_corners

        hit = False
        for source, target in [
            (skew((2, 1), (1,)), skew((2,), ())),
            (skew((3, 2), (1,)), skew((3, 2), (1,))),
            (skew((3, 1, 1), (1,)), skew((2, 2, 1), (1,))),
        ]:
            for p in enumerate_pictures(source, target):
                blocked = set(inner_corners(p.source)) - set(removable_corners(p))
                for v in blocked:
                    hit = True
                    with pytest.raises(NotRemovableError):
                        picture_delete(p, v)
        assert hit

    def test_round_trips_on_enumerated_pool(self):
        for source, target in [
            (skew((3, 2), (1,)), skew((3, 2), (1,))),
            (skew((2, 2, 1), ()), skew((3, 2), ())),
        ]:
            for p in enumerate_pictures(source, target):
                for z in addable_cocorners(p):
                    destination, _ = picture_bump_destination(p, z)
                    grown = picture_insert(p, z)
                    back, out = picture_delete(grown, destination)
                    assert back == p and out == z
                for v in removable_corners(p):
                    shrunk, out = picture_delete(p, v)
                    assert picture_insert(shrunk, out) == p


class TestSerialisation:
    def test_json_round_trip(self, example_picture):
        obj = picture_to_json(example_picture)
        assert obj["source"] == {"outer": [5, 5, 4, 3], "inner": [4, 3, 2]}
        assert obj["target"] == {"outer": [5, 5, 4, 2, 1], "inner": [3, 3, 2, 1]}
        assert obj["map"][0] == [4, 1, 5, 1]
        assert picture_from_json(json.loads(json.dumps(obj))) == example_picture

    def test_render_labels_match(self, example_picture):
        text = render_picture(example_picture)
        lines = text.split("\n")
        assert len(lines) == 5
        # source block ends with the bottom row a c g, target with A
        assert "[a][c][g]" in lines[3]
        assert lines[4].strip().startswith("[A]")
        assert "->" in lines[2]
