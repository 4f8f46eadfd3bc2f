import math

import pytest

import moea_tcd


def test_dominance():
    assert moea_tcd.compare_dominance([3, 2], [1, 2]) == "first-dominates"
    assert moea_tcd.compare_dominance([2, 0], [1, 1]) == "incomparable"
    assert moea_tcd.compare_dominance([1, 1], [1, 1]) == "equal"


def test_non_dominated_sort():
    assert moea_tcd.non_dominated_sort([[0, 0], [1, 1], [3, 0], [2, 2]]) == [[2, 3], [1], [0]]
    with pytest.raises(ValueError):
        moea_tcd.non_dominated_sort([])


def test_crowding_distances():
    tcd = moea_tcd.truthful_crowding_distance([[2, 0], [1, 1], [0, 2]])
    assert math.isinf(tcd[0]) and math.isinf(tcd[2])
    assert tcd[1] == pytest.approx(2.0, abs=1e-12)
    assert moea_tcd.truthful_crowding_distance([[1, 1], [1, 1]])[1] == 0.0
    cd = moea_tcd.classic_crowding_distance([[4, 0], [3, 1], [1, 3], [0, 4]])
    assert cd[1:3] == pytest.approx([1.5, 1.5], abs=1e-12)


def test_benchmarks():
    assert moea_tcd.evaluate("omm", "11010") == [2, 3]
    assert moea_tcd.evaluate("m-omm", "11100001", m=4) == [1, 3, 3, 1]
    assert moea_tcd.front_size("m-omm", 16, m=4) == 81
    with pytest.raises(moea_tcd.ConfigError):
        moea_tcd.front_size("cocz", 7)


def test_mei():
    assert moea_tcd.mei([0, 3, 7, 10], 10) == 4


def test_run_covers_front():
    result = moea_tcd.run("nsga2-t", "m-omm", 8, m=4, seed=3)
    assert result["covered_at"] is not None
    assert result["covered_at"] <= result["evaluations_used"]
    assert len(result["final_objectives"]) == result["front_size"] == 25
    again = moea_tcd.run("nsga2-t", "m-omm", 8, m=4, seed=3)
    assert again == result


def test_run_rejects_bad_config():
    with pytest.raises(ValueError):
        moea_tcd.run("nsga2-t", "omm", 8, crossover_rate=1.0)
    with pytest.raises(ValueError):
        moea_tcd.run("spea2", "omm", 8)


def test_presets():
    names = moea_tcd.list_presets()
    assert "fig1-small" in names
    csv = moea_tcd.run_preset("fig1-small", runs=2)
    lines = csv.splitlines()
    assert lines[0] == "preset,algo,benchmark,n,m,k,N,run,seed,metric,generation,value"
    assert csv == moea_tcd.run_preset("fig1-small", runs=2)
