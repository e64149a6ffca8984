"""End-to-end smoke tests for the python bindings."""

import json
import math

import pytest

import thinheat


def test_eigenvalue_formula():
    assert thinheat.eigenvalue(1, 0, 1.0) == pytest.approx(math.pi**2, rel=1e-15)
    assert thinheat.eigenvalue(0, 1, 0.5) == pytest.approx(4 * math.pi**2, rel=1e-15)
    with pytest.raises(ValueError):
        thinheat.eigenvalue(1, 0, 0.0)


def test_ordered_spectrum_ladder():
    ladder = thinheat.ordered_spectrum(0.5, 7)
    got = [p.lambda_ / math.pi**2 for p in ladder]
    assert got == pytest.approx([0, 1, 4, 4, 5, 8, 9], abs=1e-12)
    assert [p.rank for p in ladder] == list(range(1, 8))
    assert (ladder[0].m, ladder[0].n) == (0, 0)


def test_constant_equilibrium():
    one = thinheat.sample("constant", 33, 33)
    out = thinheat.solve(one, eps=0.7, t=5.0)
    assert max(abs(v - 1.0) for v in out.values()) <= 1e-12


def test_projection_round_trip():
    f = thinheat.sample("cos_x1(1)", 65, 65)
    state = thinheat.project(f, eps=0.5, count=7)
    coeffs = {
        (state.pair(k).m, state.pair(k).n): state.coefficient(k) for k in range(len(state))
    }
    assert coeffs[(1, 0)] == pytest.approx(1 / math.sqrt(2), abs=1e-8)
    back = thinheat.reconstruct(state, 65, 65)
    worst = max(abs(a - b) for a, b in zip(back.values(), f.values()))
    assert worst <= 1e-8
    assert thinheat.parseval_defect(f, state) <= 1e-8


def test_evolve_semigroup():
    f = thinheat.sample("sum:cos_x1(1),cos_x2(1)", 65, 65)
    state = thinheat.project(f, eps=0.5, count=9)
    split = thinheat.evolve(thinheat.evolve(state, 0.3), 0.6)
    direct = thinheat.evolve(state, 0.3 + 0.6)
    for k in range(len(state)):
        assert split.coefficient(k) == direct.coefficient(k)


def test_solve_closed_form():
    f = thinheat.sample("cos_x1(1)", 65, 65)
    out = thinheat.solve(f, eps=0.5, t=0.1)
    decay = math.exp(-0.1 * math.pi**2)
    worst = max(
        abs(out.at(i, j) - decay * math.cos(math.pi * out.coord1(i)))
        for i in range(out.nx1)
        for j in range(out.nx2)
    )
    assert worst <= 1e-8


def test_fd_oracle_close_to_spectral():
    f = thinheat.sample("cos_x1(1)", 33, 33)
    fd = thinheat.fd_solve(f, eps=0.5, t=0.05, dt=1e-3)
    spectral = thinheat.solve(f, eps=0.5, t=0.05)
    diff = thinheat.GridField(33, 33)
    for i in range(33):
        for j in range(33):
            diff.set(i, j, fd.at(i, j) - spectral.at(i, j))
    assert math.sqrt(thinheat.inner_product(diff, diff)) <= 1e-3
    assert thinheat.fd_mean(f) == pytest.approx(0.0, abs=1e-12)


def test_limit_problem_consistency():
    u = thinheat.sample1d("sum:constant,cos_x1(1)", 65)
    evolved = thinheat.evolve1d(u, 0.1)
    embedded = thinheat.embed(evolved, 65)
    two_d = thinheat.solve(thinheat.embed(u, 65), eps=0.25, t=0.1)
    worst = max(abs(a - b) for a, b in zip(embedded.values(), two_d.values()))
    assert worst <= 1e-8
    assert thinheat.eigenvalue1d(2) == pytest.approx(math.pi**2, rel=1e-15)


def test_solution_error_closed_form():
    v0 = thinheat.sample("sum:cos_x1(1),cos_x2(1)", 65, 65)
    curve = thinheat.solution_error(v0, eps=0.25, t_grid=[0.1])
    want = math.exp(-1.6 * math.pi**2) / math.sqrt(2)
    assert curve.error[0] == pytest.approx(want, abs=1e-9)
    assert curve.sup_error == curve.error[0]


def test_choose_truncation_frozen_case():
    count, certified = thinheat.choose_truncation(0.5, 1.0, 1.0, tol=1e-12)
    assert (count, certified) == (2, True)


def test_serialization_round_trips():
    f = thinheat.sample("product(1,2)", 33, 33)
    text = thinheat.to_csv(f)
    back = thinheat.parse_csv(text)
    assert back.values() == f.values()

    state = thinheat.project(f, eps=0.5, count=4)
    doc = json.loads(thinheat.state_to_json(state))
    assert doc["truncation_count"] == 4
    again = thinheat.state_from_json(thinheat.state_to_json(state))
    assert again.coefficients() == state.coefficients()


def test_convergence_report_json():
    v0 = thinheat.sample("sum:cos_x1(1),cos_x2(1)", 33, 33)
    text = thinheat.convergence_report_json([0.5, 0.25], v0, 2, [0.05, 0.5])
    doc = json.loads(text)
    assert doc["eps_list"] == [0.5, 0.25]
    assert len(doc["curves"]) == 2
    assert doc["curves"][0]["sup_error"] > doc["curves"][1]["sup_error"]
