"""conftest.py - Shared fixtures for the enriched_workbench tests."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.base_category import make_base
from enriched_workbench.config import WorkbenchConfig, set_config
from enriched_workbench.enriched_core import (
    VCategory, self_enrichment, superalgebra_category)
from enriched_workbench.vmonoidal import self_enriched_monoidal

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture(autouse=True)
def default_config():
    """Run every test on one thread with the default dimension cap."""
    set_config(WorkbenchConfig())
    yield
    set_config(None)


@pytest.fixture(scope="session")
def svec():
    """Super vector spaces: Z/2 with χ(1,1) = -1."""
    return make_base([2], 2, [(0, 0, 1)])


@pytest.fixture(scope="session")
def z4():
    """Z/4-graded spaces with χ(g,h) = i^{gh}."""
    return make_base([4], 4, [(0, 0, 1)])


@pytest.fixture(scope="session")
def triv(svec):
    """One object * with C(* -> *) = 1_V."""
    unit = svec.unit
    return VCategory(svec, ["*"], {("*", "*"): unit},
                     {"*": svec.identity(unit)},
                     {("*", "*", "*"): svec.identity(unit)}, "triv")


@pytest.fixture(scope="session")
def vhat(svec):
    """The self-enrichment on the simple objects 1 and Π."""
    return self_enrichment(svec, svec.simples())


@pytest.fixture(scope="session")
def vhat_dim2(svec):
    """The simples plus the words 1+Π and Π+1."""
    window = svec.simples() + [svec.word([0, 1]), svec.word([1, 0])]
    return self_enrichment(svec, window, "Vhat2")


@pytest.fixture(scope="session")
def vhat_z4(z4):
    """The self-enrichment of Z/4-graded spaces on the simples."""
    return self_enrichment(z4, z4.simples(), "Vhat4")


@pytest.fixture(scope="session")
def vhat_monoidal(svec):
    """V̂ on the simples as a V-monoidal category."""
    return self_enriched_monoidal(svec, svec.simples())


@pytest.fixture(scope="session")
def cliff(svec):
    """The Clifford superalgebra, e·e = 1."""
    return superalgebra_category(svec, 1, "Cliff")


@pytest.fixture(scope="session")
def ext(svec):
    """The exterior superalgebra, e·e = 0."""
    return superalgebra_category(svec, 0, "Ext")
