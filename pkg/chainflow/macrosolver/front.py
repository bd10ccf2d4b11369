#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the macroscale front-tracking finite-volume solver.

Bulk cells are advanced with the local Lax-Friedrichs flux. The phase
interface is a moving mesh edge whose speed and adjacent states come from
the microscale Riemann solver, or from the surrogate when a close enough
sample is stored.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from chainflow.eos.state import FluidState
from chainflow.eos.vdw import classify_phase, is_admissible, maxwell_equilibrium
from chainflow.kirkwood.kirkwood import InterfaceTrack
from chainflow.macrosolver.flux import interface_flux, lax_friedrichs_flux, wave_speed
from chainflow.microsolver.micro import MicroConfig, RiemannResponse, micro_oracle
from chainflow.misc.misc import Stopwatch
from chainflow.surrogate.kernel import GateConfig, evaluate_gated, initial_state, sample, score
from chainflow.util.errors import NumericalError, StepRejected, ValidationError
from chainflow.util.util import write_table

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['FrontMesh',
           'MacroConfig',
           'StepResult',
           'MacroRun',
           'REPORT_HEADER',
           'DRIVER_GATE',
           'driver_gate',
           'riemann_mesh',
           'cfl_dt',
           'boundary_states',
           'step',
           'run',
           'write_mesh_csv',
           'write_report_csv']

allowed_boundaries = ('reflecting', 'inflow', 'oscillating')

# a lone sample predicts its own output near it
DRIVER_GATE = {'offset': 'mean'}

REPORT_HEADER = ['step', 't', 'micro_calls_total', 'score_min',
                 'wall_ms_bulk', 'wall_ms_micro', 'wall_ms_surrogate']


def driver_gate(**kwargs):
    """Gate settings of the multiscale driver."""
    return GateConfig(**dict(DRIVER_GATE, **kwargs))


@dataclass(frozen=True, eq=False)
class FrontMesh(object):
    """
    Cell edges, conservative cell states and phase labels, with an optional
    tracked interface located at ``edges[interface_edge]``.

    Attributes
    ----------
    edges : ndarray
        Strictly increasing, n_cells + 1 entries.
    states : ndarray
        Shape (n_cells, 2), (rho, rho*v) per cell.
    phase_labels : tuple of str
        'liquid' or 'vapor' per cell, constant on each side of the interface.
    interface_edge : int or None
        Index of the interface edge, between 1 and n_cells - 1.
    h0 : float
        Reference cell width for merging and splitting.
    """

    edges: np.ndarray
    states: np.ndarray
    phase_labels: Tuple[str, ...]
    interface_edge: Optional[int] = None
    h0: Optional[float] = None

    def __post_init__(self):
        edges = np.array(self.edges, dtype=float)
        states = np.array(self.states, dtype=float)
        labels = tuple(str(l) for l in self.phase_labels)
        if edges.ndim != 1 or len(edges) < 3:
            raise ValidationError('A mesh needs at least two cells.')
        if np.any(np.diff(edges) <= 0):
            raise ValidationError('Mesh edges must be strictly increasing.')
        n = len(edges) - 1
        if states.shape != (n, 2) or len(labels) != n:
            raise ValidationError('Mesh has {:d} cells but states of shape {} and {:d} labels.'.format(
                n, states.shape, len(labels)))
        if any(l not in ('liquid', 'vapor') for l in labels):
            raise ValidationError('Phase labels must be liquid or vapor.')
        k = self.interface_edge
        if k is None:
            if len(set(labels)) != 1:
                raise ValidationError('A mesh without interface must hold a single phase.')
        else:
            k = int(k)
            if not 1 <= k <= n - 1:
                raise ValidationError('Interface edge {:d} is not interior.'.format(k))
            if len(set(labels[:k])) != 1 or len(set(labels[k:])) != 1 or labels[k - 1] == labels[k]:
                raise ValidationError('Phase labels must change exactly at the interface edge.')
        h0 = float(np.mean(np.diff(edges))) if self.h0 is None else float(self.h0)
        edges.setflags(write=False)
        states.setflags(write=False)
        object.__setattr__(self, 'edges', edges)
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'phase_labels', labels)
        object.__setattr__(self, 'interface_edge', k)
        object.__setattr__(self, 'h0', h0)

    @property
    def n_cells(self):
        return len(self.states)

    @property
    def widths(self):
        return np.diff(self.edges)

    @property
    def centers(self):
        return 0.5 * (self.edges[1:] + self.edges[:-1])

    @property
    def velocity(self):
        return self.states[:, 1] / self.states[:, 0]

    @property
    def x_interface(self):
        if self.interface_edge is None:
            return None
        return float(self.edges[self.interface_edge])

    def total_mass(self):
        return float(np.sum(self.widths * self.states[:, 0]))

    def total_momentum(self):
        return float(np.sum(self.widths * self.states[:, 1]))


@dataclass
class MacroConfig(object):
    """
    Settings of a macroscale run.

    Initial and inflow states are given as (rho, v). ``None`` initial states
    mean the Maxwell equilibrium at rest, liquid on the left.
    """

    x_min: float = 0.
    x_max: float = 1.
    n_cells: int = 200
    x_interface: float = 0.5
    initial_left: Optional[Tuple[float, float]] = None
    initial_right: Optional[Tuple[float, float]] = None
    cfl: float = 0.5
    t_end: float = 1.
    boundary: str = 'reflecting'
    left_state: Optional[Tuple[float, float]] = None
    right_state: Optional[Tuple[float, float]] = None
    wall_amplitude: float = 0.
    wall_period: float = 1.
    output_stride: int = 10
    merge_fraction: float = 0.3
    split_fraction: float = 1.7
    max_rejections: int = 5
    gate: GateConfig = field(default_factory=driver_gate)
    micro: MicroConfig = field(default_factory=MicroConfig)

    def __post_init__(self):
        for name in ('initial_left', 'initial_right', 'left_state', 'right_state'):
            value = getattr(self, name)
            if value is not None:
                value = tuple(float(v) for v in value)
                if len(value) != 2:
                    raise ValidationError('macro.{} must be a (rho, v) pair.'.format(name))
                setattr(self, name, value)
        if int(self.n_cells) != self.n_cells or self.n_cells < 2:
            raise ValidationError('macro.n_cells must be an integer >= 2.')
        self.n_cells = int(self.n_cells)
        if not self.x_max > self.x_min:
            raise ValidationError('macro.x_max must exceed macro.x_min.')
        if not self.x_min < self.x_interface < self.x_max:
            raise ValidationError('macro.x_interface must lie inside the domain.')
        if not 0 < self.cfl < 1:
            raise ValidationError('macro.cfl must lie in (0, 1).')
        if not self.t_end >= 0:
            raise ValidationError('macro.t_end must be nonnegative.')
        if self.boundary not in allowed_boundaries:
            raise ValidationError('macro.boundary must be one of {}.'.format(allowed_boundaries))
        if self.boundary == 'inflow' and (self.left_state is None or self.right_state is None):
            raise ValidationError('Inflow boundaries need macro.left_state and macro.right_state.')
        if not self.wall_period > 0:
            raise ValidationError('macro.wall_period must be positive.')
        if int(self.output_stride) != self.output_stride or self.output_stride < 1:
            raise ValidationError('macro.output_stride must be a positive integer.')
        if not 0 < self.merge_fraction < 1 < self.split_fraction:
            raise ValidationError('Need 0 < macro.merge_fraction < 1 < macro.split_fraction.')
        if not self.split_fraction > 2 * self.merge_fraction:
            raise ValidationError('Split cells must stay above the merge threshold.')
        if int(self.max_rejections) != self.max_rejections or self.max_rejections < 0:
            raise ValidationError('macro.max_rejections must be a nonnegative integer.')

    def initial_states(self, params):
        """Left and right initial FluidStates."""
        eq = maxwell_equilibrium(params)
        left = self.initial_left or (eq.rho_liq, 0.)
        right = self.initial_right or (eq.rho_vap, 0.)
        return FluidState.from_velocity(*left), FluidState.from_velocity(*right)

    def initial_mesh(self, params):
        u_L, u_R = self.initial_states(params)
        return riemann_mesh(self.x_min, self.x_max, self.n_cells, self.x_interface, u_L, u_R, params)


@dataclass(frozen=True)
class StepResult(object):
    mesh: FrontMesh
    state: object
    dt: float
    response: Optional[RiemannResponse] = None
    sampled: bool = False
    score: float = float('nan')
    rejections: int = 0
    wall_ms_bulk: float = 0.
    wall_ms_micro: float = 0.
    wall_ms_surrogate: float = 0.


@dataclass
class MacroRun(object):
    """
    Outcome of :func:`run`: stored meshes, one report row per step, the
    interface trajectory and run totals.
    """

    trajectory: list
    report: list
    track: InterfaceTrack
    state: object
    totals: dict


def _as_array(u):
    if isinstance(u, FluidState):
        return u.as_array()
    return np.asarray(u, dtype=float).reshape(2)


def riemann_mesh(x_min, x_max, n_cells, x_interface, u_L, u_R, params):
    """
    Uniform mesh holding u_L left of x_interface and u_R right of it.

    The interface is snapped to the nearest interior edge. When both states
    lie in the same phase the mesh carries no interface.

    Parameters
    ----------
    x_min, x_max : float
    n_cells : int
    x_interface : float
    u_L, u_R : FluidState or array_like
        Conservative states (rho, rho*v).
    params : VdwParams

    Returns
    -------
    FrontMesh
    """
    edges = np.linspace(x_min, x_max, n_cells + 1)
    h = (x_max - x_min) / n_cells
    k = int(np.clip(np.round((x_interface - x_min) / h), 1, n_cells - 1))
    u_L, u_R = _as_array(u_L), _as_array(u_R)
    phases = []
    for u in (u_L, u_R):
        phase = classify_phase(1. / u[0], params) if u[0] > 0 else 'spinodal'
        if phase == 'spinodal' or not is_admissible(1. / u[0], params, phase):
            raise ValidationError('Initial state {} is not admissible.'.format(u))
        phases.append(phase)
    states = np.empty((n_cells, 2))
    states[:k] = u_L
    states[k:] = u_R
    labels = [phases[0]] * k + [phases[1]] * (n_cells - k)
    interface = k if phases[0] != phases[1] else None
    return FrontMesh(edges, states, tuple(labels), interface, h)


def cfl_dt(mesh, cfl, params, interface_speed=None):
    """
    Largest stable time step: cfl * min(width / (|v| + c)) over all cells,
    further capped so the interface moves at most a fraction ``cfl`` of the
    cell it moves into. A boundary cell does not cap the step: the phase in
    it vanishes once the interface reaches the wall.
    """
    speeds = wave_speed(mesh.states, params)
    widths = mesh.widths
    with np.errstate(divide='ignore'):
        dt = cfl * np.min(widths / speeds)
    k = mesh.interface_edge
    if k is not None and interface_speed:
        j = k if interface_speed > 0 else k - 1
        if 0 < j < mesh.n_cells - 1:
            dt = min(dt, cfl * widths[j] / abs(interface_speed))
    if not np.isfinite(dt) or dt <= 0:
        raise NumericalError('No finite CFL time step for this mesh.')
    return float(dt)


def boundary_states(mesh, cfg, t=0.):
    """
    Ghost states left of the first and right of the last cell.

    'reflecting' mirrors the momentum and 'inflow' holds the configured
    states. 'oscillating' drives the left wall with velocity
    wall_amplitude*sin(2*pi*t/wall_period) and reflects on the right; mass
    then enters and leaves through the left wall over a period.
    """
    first, last = mesh.states[0], mesh.states[-1]
    left = np.array([first[0], -first[1]])
    right = np.array([last[0], -last[1]])
    if cfg.boundary == 'inflow':
        left = FluidState.from_velocity(*cfg.left_state).as_array()
        right = FluidState.from_velocity(*cfg.right_state).as_array()
    elif cfg.boundary == 'oscillating':
        v_wall = cfg.wall_amplitude * np.sin(2. * np.pi * t / cfg.wall_period)
        left[1] += 2. * first[0] * v_wall
    return left, right


def _bulk_fluxes(mesh, cfg, t, params):
    left, right = boundary_states(mesh, cfg, t)
    U = np.vstack([left, mesh.states, right])
    speeds = wave_speed(U, params)
    alpha = np.maximum(speeds[:-1], speeds[1:])
    return lax_friedrichs_flux(U[:-1], U[1:], alpha, params)


def _admissible_response(y, phase_l, phase_r, params):
    try:
        resp = y if isinstance(y, RiemannResponse) else RiemannResponse.from_vector(y)
    except ValidationError:
        return None
    if is_admissible(resp.u_star_L.tau, params, phase_l) and is_admissible(resp.u_star_R.tau, params, phase_r):
        return resp
    return None


def _interface_response(mesh, state, gate, micro, params):
    k = mesh.interface_edge
    phase_l, phase_r = mesh.phase_labels[k - 1], mesh.phase_labels[k]
    x = np.concatenate([mesh.states[k - 1], mesh.states[k]])
    gate_score = score(x, state.sample_set, state.scaling)
    y, state, sampled = evaluate_gated(x, state, gate, micro)
    response = _admissible_response(y, phase_l, phase_r, params)
    if response is None and not sampled:
        logger.info('Predicted starred states are inadmissible, sampling x={}.'.format(x))
        y, state, _ = sample(x, state, micro, gate)
        sampled = True
        response = _admissible_response(y, phase_l, phase_r, params)
    if response is None:
        raise StepRejected('Microscale response {} has inadmissible starred states.'.format(y))
    return response, state, sampled, gate_score


def _advance(mesh, fluxes, interface, dt, params):
    U = mesh.states
    w = mesh.widths
    edges = np.array(mesh.edges)
    new = U - (dt / w)[:, None] * (fluxes[1:] - fluxes[:-1])
    k = mesh.interface_edge
    labels = mesh.phase_labels
    if interface is not None:
        g, s = interface
        x_new = edges[k] + s * dt
        at_wall = (k == 1 and x_new <= edges[0]) or (k == mesh.n_cells - 1 and x_new >= edges[-1])
        if at_wall and mesh.n_cells > 2:
            # the interface reaches the wall: the boundary cell joins its neighbour
            content = w[k - 1] * U[k - 1] + w[k] * U[k] + dt * (fluxes[k - 1] - fluxes[k + 1])
            gone, wall, survivor = ((labels[0], edges[0], labels[1]) if k == 1
                                    else (labels[-1], edges[-1], labels[-2]))
            new[k - 1] = content / (edges[k + 1] - edges[k - 1])
            new = np.delete(new, k, axis=0)
            edges = np.delete(edges, k)
            labels = (survivor,) * len(new)
            k = None
        elif not edges[k - 1] < x_new < edges[k + 1]:
            raise StepRejected('Interface moved past a neighbouring edge.')
        else:
            edges[k] = x_new
            new[k - 1] = (w[k - 1] * U[k - 1] + dt * (fluxes[k - 1] - g)) / (edges[k] - edges[k - 1])
            new[k] = (w[k] * U[k] + dt * (g - fluxes[k + 1])) / (edges[k + 1] - edges[k])
    rho = new[:, 0]
    ok = np.isfinite(new).all(axis=1) & (rho > 0)
    if not ok.all():
        raise StepRejected('Nonpositive or nonfinite density in cells {}.'.format(np.nonzero(~ok)[0][:5]))
    label_array = np.array(labels)
    tau = 1. / rho
    for phase in set(labels):
        sel = label_array == phase
        bad = ~is_admissible(tau[sel], params, phase)
        if bad.any():
            raise StepRejected('{:d} {} cells left their admissible set.'.format(int(bad.sum()), phase))
    if k is None and mesh.interface_edge is not None:
        logger.info('The {} phase vanished at the wall x = {:g}.'.format(gone, wall))
    return FrontMesh(edges, new, labels, k, mesh.h0)


def _merge(edges, states, labels, i):
    # cells i and i + 1 become one
    w = np.diff(edges)
    merged = (w[i] * states[i] + w[i + 1] * states[i + 1]) / (w[i] + w[i + 1])
    states = np.delete(states, i + 1, axis=0)
    states[i] = merged
    return np.delete(edges, i + 1), states, labels[:i + 1] + labels[i + 2:]


def _split(edges, states, labels, i):
    mid = 0.5 * (edges[i] + edges[i + 1])
    return (np.insert(edges, i + 1, mid), np.insert(states, i, states[i], axis=0),
            labels[:i + 1] + labels[i:])


def _absorb(edges, states, labels, k, params):
    # a one-cell phase at a wall joins its neighbour across the interface
    survivor = labels[k] if k == 1 else labels[k - 1]
    w = np.diff(edges)
    rho = (w[k - 1] * states[k - 1, 0] + w[k] * states[k, 0]) / (w[k - 1] + w[k])
    if not np.all(is_admissible(1. / rho, params, survivor)):
        return None
    logger.info('The {} phase vanished at the wall.'.format(labels[0] if k == 1 else labels[-1]))
    edges, states, _ = _merge(edges, states, labels, k - 1)
    return edges, states, (survivor,) * len(states)


def _maintain(mesh, cfg, params):
    """
    Merge or split the two cells next to the interface.

    A cell below the merge threshold joins its same-phase neighbour. When
    it has none, because its phase fills a single cell at a wall, it joins
    the cell across the interface as soon as the combined state is
    admissible for that phase, and the interface is dropped.
    """
    k = mesh.interface_edge
    if k is None:
        return mesh
    edges, states, labels = np.array(mesh.edges), np.array(mesh.states), mesh.phase_labels
    lo, hi = cfg.merge_fraction * mesh.h0, cfg.split_fraction * mesh.h0
    n = len(states)
    for side_is_wall, w in ((k == 1, edges[1] - edges[0]), (k == n - 1, edges[-1] - edges[-2])):
        if side_is_wall and w < lo and n > 2:
            absorbed = _absorb(edges, states, labels, k, params)
            if absorbed is not None:
                return FrontMesh(absorbed[0], absorbed[1], absorbed[2], None, mesh.h0)
    w = edges[k] - edges[k - 1]
    if w < lo and k >= 2:
        edges, states, labels = _merge(edges, states, labels, k - 2)
        k -= 1
    elif w > hi:
        edges, states, labels = _split(edges, states, labels, k - 1)
        k += 1
    w = edges[k + 1] - edges[k]
    if w < lo and k + 1 < len(states):
        edges, states, labels = _merge(edges, states, labels, k)
    elif w > hi:
        edges, states, labels = _split(edges, states, labels, k)
    if len(states) != mesh.n_cells:
        logger.debug('Interface cells remeshed, now {:d} cells.'.format(len(states)))
    return FrontMesh(edges, states, labels, k, mesh.h0)


class _TimedOracle(object):

    def __init__(self, micro, stopwatch):
        self.micro = micro
        self.stopwatch = stopwatch

    def __call__(self, x):
        with self.stopwatch:
            return self.micro(x)


def step(mesh, dt, state, cfg, micro, params, t=0.):
    """
    Advance the mesh by one explicit step.

    Bulk cells take the conservative update U - dt/w*(F_right - F_left).
    The two cells next to the interface are updated in conservation form
    over their moving widths with the interface flux. If the interface
    would overtake a neighbouring edge, or a cell leaves its admissible
    set, dt is halved and the step repeated with the same interface
    response.

    Parameters
    ----------
    mesh : FrontMesh
    dt : float
        Proposed time step.
    state : SurrogateState
    cfg : MacroConfig
    micro : callable
        Microscale oracle.
    params : VdwParams
    t : float
        Time at the start of the step, used by the oscillating wall.

    Returns
    -------
    StepResult

    Raises
    ------
    StepRejected
        After ``cfg.max_rejections`` halvings, or when even a fresh
        microscale response is inadmissible.
    """
    bulk, micro_sw, gate_sw = Stopwatch(), Stopwatch(), Stopwatch()
    response, sampled, gate_score, interface = None, False, float('nan'), None
    if mesh.interface_edge is not None:
        with gate_sw:
            response, state, sampled, gate_score = _interface_response(
                mesh, state, cfg.gate, _TimedOracle(micro, micro_sw), params)
    with bulk:
        fluxes = _bulk_fluxes(mesh, cfg, t, params)
        if response is not None:
            interface = interface_flux(response, params)
        rejections = 0
        while True:
            try:
                new_mesh = _advance(mesh, fluxes, interface, dt, params)
                break
            except StepRejected as exc:
                if rejections == cfg.max_rejections:
                    raise StepRejected('Step at t={:g} rejected {:d} times: {}'.format(t, rejections + 1, exc))
                rejections += 1
                dt *= 0.5
                logger.warning('{} Retrying with dt={:g}, interface response {}.'.format(exc, dt, response))
        new_mesh = _maintain(new_mesh, cfg, params)
    return StepResult(mesh=new_mesh, state=state, dt=dt, response=response, sampled=sampled,
                      score=gate_score, rejections=rejections, wall_ms_bulk=bulk.ms,
                      wall_ms_micro=micro_sw.ms, wall_ms_surrogate=max(gate_sw.ms - micro_sw.ms, 0.))


def run(cfg, params, initial=None, micro=None, state=None, observer=None):
    """
    Integrate from ``initial`` (default: the mesh described by ``cfg``) up
    to ``cfg.t_end``.

    Parameters
    ----------
    cfg : MacroConfig
    params : VdwParams
    initial : FrontMesh, optional
    micro : callable, optional
        Defaults to the particle-chain oracle built from ``cfg.micro``.
    state : SurrogateState, optional
        Defaults to an empty surrogate built from ``cfg.gate``.
    observer : callable, optional
        Called as observer(t, mesh) for every stored mesh.

    Returns
    -------
    MacroRun
    """
    mesh = cfg.initial_mesh(params) if initial is None else initial
    micro = micro_oracle(params, cfg.micro) if micro is None else micro
    state = initial_state(cfg.gate, params) if state is None else state

    t, n_steps, calls, speed = 0., 0, 0, None
    totals = {'wall_ms_bulk': 0., 'wall_ms_micro': 0., 'wall_ms_surrogate': 0.}
    trajectory, report = [(t, mesh)], []
    times, positions = [], []
    if mesh.x_interface is not None:
        times.append(t)
        positions.append(mesh.x_interface)
    if observer is not None:
        observer(t, mesh)

    while t < cfg.t_end:
        remaining = cfg.t_end - t
        dt = cfl_dt(mesh, cfg.cfl, params, speed)
        last = dt >= remaining
        if last:
            dt = remaining
        result = step(mesh, dt, state, cfg, micro, params, t)
        t = cfg.t_end if last and result.dt == dt else t + result.dt
        n_steps += 1
        mesh, state = result.mesh, result.state
        if result.response is not None:
            speed = result.response.s
        calls += int(result.sampled)
        for key in totals:
            totals[key] += getattr(result, key)
        report.append({'step': n_steps, 't': t, 'micro_calls_total': calls, 'score_min': result.score,
                       'wall_ms_bulk': result.wall_ms_bulk, 'wall_ms_micro': result.wall_ms_micro,
                       'wall_ms_surrogate': result.wall_ms_surrogate})
        if mesh.x_interface is not None:
            times.append(t)
            positions.append(mesh.x_interface)
        if n_steps % cfg.output_stride == 0 or t >= cfg.t_end:
            trajectory.append((t, mesh))
            if observer is not None:
                observer(t, mesh)
        logger.debug('Step {:d}: t={:g}, dt={:g}, sampled={}.'.format(n_steps, t, result.dt, result.sampled))

    totals.update(steps=n_steps, micro_calls=calls, t_final=t, samples=len(state.sample_set))
    logger.info('Macro run finished: {:d} steps, {:d} micro calls, {:d} samples stored.'.format(
        n_steps, calls, len(state.sample_set)))
    return MacroRun(trajectory=trajectory, report=report, track=InterfaceTrack(times, positions),
                    state=state, totals=totals)


def write_mesh_csv(mesh, fname):
    """Write x_center, width, rho, v and phase per cell."""
    return write_table(fname, ['x_center', 'width', 'rho', 'v', 'phase'],
                       [mesh.centers, mesh.widths, mesh.states[:, 0], mesh.velocity,
                        list(mesh.phase_labels)])


def write_report_csv(report, fname):
    return write_table(fname, REPORT_HEADER, [[row[key] for row in report] for key in REPORT_HEADER])
