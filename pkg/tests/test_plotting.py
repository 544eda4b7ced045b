import pytest

from valmax.core import full_lattice, random_good_ideal
from valmax.plotting import plot_ideal


@pytest.mark.parametrize("seed,p,suffix", [(1, 2, "png"), (2, 3, "png"), (3, 2, "svg")])
def test_figure_written(tmp_path, seed, p, suffix):
    E = random_good_ideal(seed, p, 4)
    out = tmp_path / f"fig.{suffix}"
    plot_ideal(E, str(out), extra={"marked": {E.gammaE}})
    assert out.stat().st_size > 1000


def test_figure_needs_low_dimension(tmp_path):
    with pytest.raises(ValueError):
        plot_ideal(full_lattice(4).as_ideal(), str(tmp_path / "x.png"))
