"""test_utils.py - Test cases for the sweep helpers."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench import utils
from enriched_workbench.config import WorkbenchConfig
from enriched_workbench.enriched_core import verify_vcategory
from enriched_workbench.utils import sweep, tuples

# Load environment variables
load_dotenv()


#####################################################################
# Test functions.
def test_tuples():
    """Ordered tuples with repetition."""
    assert tuples(["a", "b"], 2) == [("a", "a"), ("a", "b"), ("b", "a"),
                                     ("b", "b")]
    assert len(tuples([1, 2, 3], 3)) == 27


def test_sweep_single_thread(mocker):
    """One thread never touches the pool."""
    pool = mocker.patch("enriched_workbench.utils.thread_map")
    assert sweep(lambda x: x * x, range(4)) == [0, 1, 4, 9]
    pool.assert_not_called()


def test_sweep_threads_keep_order(mocker):
    """Results come back in input order on a pool."""
    mocker.patch("enriched_workbench.utils.get_config",
                 return_value=WorkbenchConfig(threads=4))
    pool = mocker.spy(utils, "thread_map")
    assert sweep(lambda x: -x, range(20)) == [-x for x in range(20)]
    assert pool.call_count == 1
    assert pool.call_args.kwargs["max_workers"] == 4


def test_sweep_threads_match_serial(mocker, vhat):
    """A threaded V-category check gives the same checks as a serial one."""
    serial = verify_vcategory(vhat)
    mocker.patch("enriched_workbench.utils.get_config",
                 return_value=WorkbenchConfig(threads=3))
    threaded = verify_vcategory(vhat)
    assert threaded.checks == serial.checks


if __name__ == "__main__":
    pytest.main()
