import dataclasses

import pytest
from hypothesis import given

from conftest import valid_params
from coupledosc import ModelParams, ModeState, InitialState, validate, validate_initial
from coupledosc.errors import NegativeParameter, StabilityViolation


def test_figure_regime_accepted():
    p = ModelParams(omega=1.0, kappa=0.05, lambda_=0.05, gamma_a=0.01, gamma_b=0.01)
    assert validate(p) is p


def test_lambda_at_boundary_rejected():
    with pytest.raises(StabilityViolation):
        validate(ModelParams(omega=1.0, kappa=0.0, lambda_=1.0))


def test_zero_lambda_with_coupling_accepted():
    p = ModelParams(omega=1.0, kappa=0.3, lambda_=0.0, gamma_a=0.0)
    assert validate(p) is p


def test_negative_rates_rejected():
    for field in ("gamma_a", "gamma_b", "nbar_a", "nbar_b"):
        p = dataclasses.replace(ModelParams(omega=1.0), **{field: -0.1})
        with pytest.raises(NegativeParameter):
            validate(p)
    with pytest.raises(NegativeParameter):
        validate(ModelParams(omega=0.0))
    with pytest.raises(NegativeParameter):
        validate(ModelParams(omega=-1.0))


def test_kappa_beyond_omega_rejected():
    # a kappa above omega flips the relative-mode frequency negative even
    # though lambda < |omega - kappa| can still hold
    with pytest.raises(StabilityViolation):
        validate(ModelParams(omega=1.0, kappa=1.5, lambda_=0.3))
    with pytest.raises(StabilityViolation):
        validate(ModelParams(omega=1.0, kappa=1.0, lambda_=0.0))


def test_negative_lambda_allowed_within_bounds():
    assert validate(ModelParams(omega=1.0, kappa=0.0, lambda_=-0.3))
    with pytest.raises(StabilityViolation):
        validate(ModelParams(omega=1.0, kappa=0.0, lambda_=-1.5))


@given(valid_params(allow_negative_lambda=True))
def test_validate_idempotent(p):
    assert validate(validate(p)) == p


@given(valid_params())
def test_acceptance_region_open_toward_zero_lambda(p):
    shrunk = dataclasses.replace(p, lambda_=p.lambda_ * (1.0 - 1e-9))
    assert validate(shrunk) == shrunk


def test_initial_state_validation():
    validate_initial(InitialState.vacuum())
    validate_initial(InitialState(ModeState(n0=0.5, r=0.3), ModeState()))
    with pytest.raises(NegativeParameter):
        validate_initial(InitialState(ModeState(n0=-0.1), ModeState()))
    with pytest.raises(NegativeParameter):
        validate_initial(InitialState(ModeState(), ModeState(r=-0.2)))
