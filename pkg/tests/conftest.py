"""Shared algebra fixtures."""

import os

import pytest

from src.heytingkit.lattice import boolean, chain, product

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

CHAINS = {f"chain{n}": (lambda n=n: chain(n)) for n in range(2, 7)}
BOOLEANS = {f"boolean{k}": (lambda k=k: boolean(k)) for k in range(1, 4)}
PRODUCTS = {
    "chain2xchain3": lambda: product(chain(2), chain(3)),
    "chain3xchain3": lambda: product(chain(3), chain(3)),
    "chain2xboolean2": lambda: product(chain(2), boolean(2)),
    "chain3xchain4": lambda: product(chain(3), chain(4)),
    "chain4xchain4": lambda: product(chain(4), chain(4)),
    "boolean2xchain4": lambda: product(boolean(2), chain(4)),
}
CORPUS = {**CHAINS, **BOOLEANS, **PRODUCTS}
SMALL = ["chain2", "chain3", "chain4", "boolean1", "boolean2", "chain2xchain3"]


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(params=sorted(CORPUS))
def corpus_algebra(request):
    """Every fixture algebra: chains up to 6, Boolean algebras up to 8, products up to 16."""
    return CORPUS[request.param]()


@pytest.fixture(params=SMALL)
def small_algebra(request):
    return CORPUS[request.param]()


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def boolean2():
    return boolean(2)
