"""Boundary-defense solvers: thin dict-level wrappers over the C++ core."""

import json

from . import _core

InstanceParseError = _core.InstanceParseError
StateSpaceError = _core.StateSpaceError
InstanceTooLargeError = _core.InstanceTooLargeError

__all__ = [
    "generate",
    "solve",
    "check_plan",
    "simulate",
    "lp_text",
    "reach",
    "InstanceParseError",
    "StateSpaceError",
    "InstanceTooLargeError",
]


def generate(topology, *, size=None, lam=1.0, events=0, defenders=1,
             vmin=1.0, vmax=1.0, vsum=None, seed=0):
    """Sample a random instance; returns it as a dict."""
    return json.loads(_core.generate(topology, size, lam, events, defenders,
                                     vmin, vmax, vsum, seed))


def solve(instance, algo="dp", *, time_limit=60.0, single_pass=False):
    """Solve an instance dict with dp | edp | bnb | oracle.

    Returns {"plan": ..., "report": {...}}; the oracle reports a count only.
    """
    out = json.loads(_core.solve(json.dumps(instance), algo, time_limit,
                                 single_pass))
    return out


def check_plan(instance, plan):
    """Audit a plan dict against an instance dict."""
    return json.loads(_core.check_plan(json.dumps(instance), json.dumps(plan)))


def simulate(instance, horizon, *, record_trajectories=False):
    """Finite-horizon online run; horizon may be float('inf')."""
    return json.loads(_core.simulate(json.dumps(instance), horizon,
                                     record_trajectories))


def lp_text(instance):
    """The instance's flow model in LP text format."""
    return _core.lp_text(json.dumps(instance))


def reach(instance, a, d, *, forward=True):
    """next(a, d) (forward) or prev(a, d) event index lists."""
    return _core.reach(json.dumps(instance), a, d, forward)
