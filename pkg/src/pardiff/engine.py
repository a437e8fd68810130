"""Simultaneous firing engine: stepping, traces, and period detection.

One step: every vertex simultaneously sends a chip to each strictly poorer
neighbour, so the new stack is old - (#poorer neighbours) + (#richer
neighbours), all comparisons against the OLD configuration. Every sequence
eventually cycles with period 1 or 2; detection below leans on that fact
instead of generic cycle finding.
"""

from __future__ import annotations

from dataclasses import dataclass

from pardiff.errors import (
    ConfigMismatchError,
    InternalInconsistencyError,
    PeriodNotFoundError,
    StackLimitError,
)
from pardiff.graphs import (
    I64_MAX,
    Configuration,
    EdgeSense,
    Graph,
    PathGraph,
    PathOrientation,
    adjacency,
)


@dataclass(frozen=True)
class PeriodReport:
    """Least preperiod N and least period p in {1, 2}, with the orbit at time N."""

    preperiod: int
    period: int
    orbit: tuple[Configuration, ...]

    def to_dict(self) -> dict:
        return {
            "preperiod": self.preperiod,
            "period": self.period,
            "orbit": [list(c.stacks) for c in self.orbit],
        }


@dataclass(frozen=True)
class SequenceTrace:
    """Configurations C_0, C_1, ... produced by repeated firing; steps[0] is C_0."""

    initial: Configuration
    steps: tuple[Configuration, ...]

    def to_json_lines(self) -> list[dict]:
        return [{"step": t, "stacks": list(c.stacks)} for t, c in enumerate(self.steps)]


def _fire_raw(stacks: tuple[int, ...], adj: list[list[int]]) -> tuple[int, ...]:
    out = []
    for v, sv in enumerate(stacks):
        delta = 0
        for w in adj[v]:
            sw = stacks[w]
            if sw > sv:
                delta += 1
            elif sw < sv:
                delta -= 1
        out.append(sv + delta)
    return tuple(out)


def _check_i64(stacks: tuple[int, ...]):
    for x in stacks:
        if x > I64_MAX or x < -I64_MAX - 1:
            raise StackLimitError(f"stack size {x} outside signed 64-bit range")


def fire_step(graph: Graph, config: Configuration) -> Configuration:
    """One simultaneous firing of every vertex."""
    if len(config.stacks) != graph.vertex_count:
        raise ConfigMismatchError(
            f"{len(config.stacks)} stacks for {graph.vertex_count} vertices"
        )
    _check_i64(config.stacks)
    new = _fire_raw(config.stacks, adjacency(graph))
    _check_i64(new)
    return Configuration(new, graph)


def run_sequence(graph: Graph, config: Configuration, max_steps: int) -> SequenceTrace:
    """Trace of max_steps firings, so max_steps + 1 configurations."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    steps = [config]
    for _ in range(max_steps):
        steps.append(fire_step(graph, steps[-1]))
    return SequenceTrace(initial=config, steps=tuple(steps))


def default_max_steps(graph: Graph, config: Configuration) -> int:
    """Heuristic step budget for period detection: 10 * n * (stack range + 1).

    No preperiod bound is known, so this is a documented guess; running out
    raises a clean period-not-found error rather than looping forever.
    """
    spread = max(config.stacks) - min(config.stacks) + 1
    return max(10 * graph.vertex_count * spread, 4)


def detect_period(graph: Graph, config: Configuration, max_steps: int) -> PeriodReport:
    """Find the least N and least p in {1, 2} with C_{N+p} = C_N (exact equality).

    Only offsets 1 and 2 are accepted, which the period-1-or-2 guarantee makes
    complete. A repeat at any other offset is impossible for a correct engine,
    so it raises InternalInconsistencyError instead of being reported.
    """
    if max_steps < 2:
        raise ValueError("max_steps must be >= 2")
    if len(config.stacks) != graph.vertex_count:
        raise ConfigMismatchError(
            f"{len(config.stacks)} stacks for {graph.vertex_count} vertices"
        )
    _check_i64(config.stacks)
    adj = adjacency(graph)
    seq = [config.stacks]
    seen = {config.stacks: 0}
    for t in range(1, max_steps + 1):
        cur = _fire_raw(seq[-1], adj)
        _check_i64(cur)
        if cur == seq[t - 1]:
            preperiod, period = t - 1, 1
            break
        if t >= 2 and cur == seq[t - 2]:
            preperiod, period = t - 2, 2
            break
        if cur in seen:
            raise InternalInconsistencyError(
                f"repeat at offset {t - seen[cur]}; the firing rule admits only 1 or 2"
            )
        seq.append(cur)
        seen[cur] = t
    else:
        raise PeriodNotFoundError(f"no repeat within {max_steps} steps; raise max_steps")
    orbit = tuple(
        Configuration(seq[preperiod + i], graph) for i in range(period)
    )
    return PeriodReport(preperiod=preperiod, period=period, orbit=orbit)


def induced_orientation(graph: PathGraph, config: Configuration) -> PathOrientation:
    """Sense of e_i from the stacks: Right if v_{i+1} is richer than v_i."""
    if len(config.stacks) != graph.vertex_count:
        raise ConfigMismatchError(
            f"{len(config.stacks)} stacks for {graph.vertex_count} vertices"
        )
    return orientation_of_stacks(config.stacks)


def orientation_of_stacks(stacks: tuple[int, ...]) -> PathOrientation:
    senses = []
    for i in range(len(stacks) - 1):
        if stacks[i + 1] > stacks[i]:
            senses.append(EdgeSense.RIGHT)
        elif stacks[i + 1] < stacks[i]:
            senses.append(EdgeSense.LEFT)
        else:
            senses.append(EdgeSense.FLAT)
    return PathOrientation(tuple(senses))


def is_inside_period(graph: Graph, config: Configuration) -> bool:
    """True iff two firings return the input exactly (covers periods 1 and 2)."""
    adj = adjacency(graph)
    _check_i64(config.stacks)
    return _fire_raw(_fire_raw(config.stacks, adj), adj) == config.stacks
