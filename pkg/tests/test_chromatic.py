import pytest
from hypothesis import given, settings

from deltachrom import (
    Coloring,
    cartesian_product,
    chi_delta,
    chromatic_number,
    complement,
    delta_complement,
    dsatur_upper,
    is_proper,
    max_clique_lower,
    oracle_chromatic,
)
from deltachrom.families import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
    wheel_graph,
)

from _oracles import brute_clique_number, exhaustive_chromatic
from strategies import graphs

# Published 10-coloring of the delta-complement of the 6 x 7 grid product,
# transcribed row by row (row-major over the 6-path first, 0-based colors).
GRID_6x7_TEN_COLORING = (
    0, 1, 1, 8, 8, 0, 8,
    3, 0, 0, 1, 1, 8, 2,
    3, 2, 2, 3, 3, 8, 2,
    5, 4, 4, 5, 5, 9, 4,
    5, 6, 6, 7, 7, 9, 4,
    6, 7, 7, 9, 9, 6, 9,
)


class TestColoring:
    def test_rejects_out_of_palette(self):
        with pytest.raises(ValueError):
            Coloring((0, 3), 3)
        with pytest.raises(ValueError):
            Coloring((0, -1), 2)

    def test_colors_used(self):
        assert Coloring((0, 0, 2), 4).colors_used == 2


class TestIsProper:
    def test_triangle_three_colors(self):
        assert is_proper(complete_graph(3), Coloring((0, 1, 2), 3))

    def test_triangle_repeated_color(self):
        assert not is_proper(complete_graph(3), Coloring((0, 1, 1), 3))

    def test_partial_coloring_rejected(self):
        with pytest.raises(ValueError):
            is_proper(complete_graph(3), Coloring((0, 1), 2))

    def test_published_grid_coloring_is_proper(self):
        product, _ = cartesian_product([path_graph(6), path_graph(7)])
        delta = delta_complement(product)
        assert is_proper(delta, Coloring(GRID_6x7_TEN_COLORING, 10))


class TestMaxClique:
    def test_complete(self):
        result = max_clique_lower(complete_graph(7))
        assert result.size == 7 and result.complete

    def test_star_star_delta_grid_clique(self):
        product, _ = cartesian_product([star_graph(3), star_graph(3)])
        assert max_clique_lower(delta_complement(product)).size >= 9

    def test_grid_product_delta_clique(self):
        product, _ = cartesian_product([path_graph(6), path_graph(7)])
        assert max_clique_lower(delta_complement(product)).size >= 10

    def test_budget_exhaustion_still_returns_clique(self):
        g = complement(cycle_graph(9))
        result = max_clique_lower(g, budget=2)
        assert not result.complete
        assert result.size == len(result.vertices)

    @given(graphs(max_n=7))
    @settings(max_examples=60)
    def test_exact_on_small_graphs(self, g):
        result = max_clique_lower(g)
        assert result.complete
        assert result.size == brute_clique_number(g)


class TestDsatur:
    def test_edgeless(self):
        assert dsatur_upper(empty_graph(5)).colors_used == 1

    def test_odd_cycle(self):
        assert dsatur_upper(cycle_graph(5)).colors_used == 3

    @given(graphs())
    def test_always_proper(self, g):
        c = dsatur_upper(g)
        assert is_proper(g, c)
        assert c.palette_size == (max(c.colors) + 1 if g.n else 0)


class TestChromaticNumber:
    def test_cycle_delta(self):
        assert chromatic_number(delta_complement(cycle_graph(9))).chi == 5

    def test_path_delta(self):
        assert chromatic_number(delta_complement(path_graph(7))).chi == 3

    def test_single_vertex(self):
        assert chromatic_number(complete_graph(1)).chi == 1

    def test_empty_graph(self):
        from deltachrom import Graph

        result = chromatic_number(Graph(0))
        assert result.chi == 0 and result.exact

    def test_cycle_complement_needs_half(self):
        # DSATUR may overshoot here; the search must close the gap to 5
        assert chromatic_number(complement(cycle_graph(9))).chi == 5

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_oracle(self, g):
        assert chromatic_number(g).chi == oracle_chromatic(g)

    @given(graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_sandwich_and_witness(self, g):
        result = chromatic_number(g)
        assert result.exact
        assert result.clique_lower <= result.chi <= dsatur_upper(g).colors_used
        assert is_proper(g, result.witness)
        assert result.witness.colors_used == result.chi
        assert len(result.clique) == result.clique_lower

    @given(graphs(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_deterministic_witness(self, g):
        first = chromatic_number(g)
        second = chromatic_number(g)
        assert first.witness == second.witness
        assert first.clique == second.clique

    def test_timeout_brackets(self):
        product, _ = cartesian_product([cycle_graph(9), path_graph(3)])
        g = delta_complement(product)
        result = chromatic_number(g, timeout=0.0)
        assert not result.exact and result.chi is None
        assert result.lower <= 10 <= result.upper
        assert is_proper(g, result.witness)

    def test_dynamic_order_same_value(self):
        g = delta_complement(cycle_graph(9))
        assert chromatic_number(g, dynamic_order=True).chi == 5


class TestOracle:
    def test_square(self):
        product, _ = cartesian_product([path_graph(2), path_graph(2)])
        assert oracle_chromatic(product) == 2

    def test_star_delta(self):
        assert oracle_chromatic(delta_complement(star_graph(3))) == 4

    def test_path_delta(self):
        assert oracle_chromatic(delta_complement(path_graph(5))) == 2

    def test_size_limit(self):
        with pytest.raises(ValueError):
            oracle_chromatic(empty_graph(13))

    @given(graphs(max_n=6))
    @settings(max_examples=40)
    def test_agrees_with_exhaustive_assignments(self, g):
        assert oracle_chromatic(g) == exhaustive_chromatic(g)


class TestChiDelta:
    def test_wheel(self):
        assert chi_delta(wheel_graph(9)).chi == 6

    def test_complete_graph_collapses(self):
        assert chi_delta(complete_graph(5)).chi == 1

    def test_cycle_times_p3(self):
        product, _ = cartesian_product([cycle_graph(5), path_graph(3)])
        assert chi_delta(product).chi == 6

    def test_result_json_schema(self):
        payload = chi_delta(cycle_graph(9)).to_json_dict()
        assert set(payload) == {"chi", "lower", "upper", "exact", "witness", "method", "ms"}
        assert payload["chi"] == 5 and payload["exact"] is True
        assert len(payload["witness"]) == 9
