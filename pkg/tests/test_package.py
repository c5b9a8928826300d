"""Top-level namespace sanity."""

import apolarity


def test_all_exports_resolve():
    missing = [name for name in apolarity.__all__
               if not hasattr(apolarity, name)]
    assert missing == []
    assert apolarity.__version__


def test_namespace_round_trip():
    f = apolarity.parse_poly("x0^3 + x1^3")
    gens = apolarity.minimal_generators(apolarity.perp(f))
    assert sorted(g.degree() for g in gens) == [2, 3]
    assert apolarity.sylvester(f).rank == 2
