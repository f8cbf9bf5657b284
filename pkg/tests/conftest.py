import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from coupledosc import ModelParams

hypothesis.settings.register_profile(
    "default", max_examples=40, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("default")


@st.composite
def valid_params(
    draw,
    *,
    min_gamma: float = 0.0,
    max_gamma: float = 0.1,
    symmetric: bool = False,
    thermal: bool = False,
    allow_negative_lambda: bool = False,
):
    """Parameter sets inside the validated stability region."""
    omega = draw(st.floats(0.5, 2.0))
    kappa = draw(st.floats(0.0, 0.6)) * omega
    lam_cap = 0.9 * min(omega - kappa, omega + kappa)
    lam = draw(st.floats(0.0, 1.0)) * lam_cap
    if allow_negative_lambda and draw(st.booleans()):
        lam = -lam
    gamma_a = draw(st.floats(min_gamma, max_gamma)) * omega
    gamma_b = gamma_a if symmetric else draw(st.floats(min_gamma, max_gamma)) * omega
    if thermal:
        nbar = draw(st.floats(0.0, 1.0))
        nbar_a = nbar_b = nbar
    else:
        nbar_a = nbar_b = 0.0
    return ModelParams(
        omega=omega,
        kappa=kappa,
        lambda_=lam,
        gamma_a=gamma_a,
        gamma_b=gamma_b,
        nbar_a=nbar_a,
        nbar_b=nbar_b,
    )


def random_valid_grid(n: int, seed: int = 20250810, min_gamma: float = 1e-3):
    """Deterministic grid of n validated parameter sets."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        omega = rng.uniform(0.5, 2.0)
        kappa = rng.uniform(0.0, 0.6) * omega
        lam = rng.uniform(0.0, 0.9) * min(omega - kappa, omega + kappa)
        gamma = rng.uniform(min_gamma, 0.1) * omega
        out.append(
            ModelParams(omega=omega, kappa=kappa, lambda_=lam, gamma_a=gamma, gamma_b=gamma)
        )
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20250810)
