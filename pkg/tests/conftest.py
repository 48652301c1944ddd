import numpy as np
import pytest

from posetdim.poset import random_poset


def random_corpus(count, n_max, seed, n_min=1):
    """Seeded list of ``(params, poset)`` with varied size and density."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        density = float(rng.uniform(0.1, 0.5))
        out.append(((n, round(density, 3), seed * 1000 + i), random_poset(n, round(density, 3), seed * 1000 + i)))
    return out


def dominance_poset(n, dims, seed):
    """Points of ``dims`` random permutations under coordinatewise dominance;
    dimension at most ``dims`` and usually equal to it for moderate ``n``."""
    from posetdim.poset import Poset

    rng = np.random.default_rng(seed)
    coords = np.array([rng.permutation(n) for _ in range(dims)])
    lt = np.all(coords[:, :, None] < coords[:, None, :], axis=0)
    return Poset(lt)


@pytest.fixture(autouse=True)
def _acceptance_tag(request, record_property):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        record_property("criterion", marker.args[0])


def pytest_terminal_summary(terminalreporter):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            crit = dict(getattr(rep, "user_properties", [])).get("criterion")
            if crit is None:
                continue
            ok, total, failed = results.get(crit, (True, 0, []))
            results[crit] = (ok and outcome == "passed", total + 1, failed + ([rep.nodeid] if outcome != "passed" else []))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(results):
        ok, total, failed = results[crit]
        line = f"criterion {crit}: {'PASS' if ok else 'FAIL'} ({total - len(failed)}/{total} checks)"
        terminalreporter.write_line(line)
        for nodeid in failed:
            terminalreporter.write_line(f"    failed: {nodeid}")
