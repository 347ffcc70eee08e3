"""The generator's ground truth and the validity of everything it emits."""

from purecoalg import validate_map
from purecoalg.corpus import generate_coalgebras, generate_maps, generate_tensor_pairs


def test_generation_is_deterministic():
    a = generate_coalgebras(11, 10)
    b = generate_coalgebras(11, 10)
    assert [x.recipe for x in a] == [y.recipe for y in b]
    assert all(x.coalgebra.delta == y.coalgebra.delta for x, y in zip(a, b))


def test_generated_coalgebras_are_valid_and_bounded():
    for entry in generate_coalgebras(13, 40, max_rank=12):
        assert 1 <= entry.coalgebra.rank <= 12
        assert entry.coalgebra.validate().overall
        assert entry.coradical_ranks[-1] == entry.coalgebra.rank
        assert sum(entry.component_ranks) == entry.coalgebra.rank


def test_generated_maps_are_valid():
    for record in generate_maps(17, 60, max_rank=8):
        assert validate_map(record.map).overall, record.kind


def test_tensor_pairs_respect_bound():
    for a, b in generate_tensor_pairs(19, 30, max_product_rank=12):
        assert a.coalgebra.rank * b.coalgebra.rank <= 12
