"""
A seeded random linear network coding channel.

A codeword V of dimension k arrives as X = H + E where H is a random
(k - rho)-dimensional subspace of V (erasures) and E a random
eps-dimensional space meeting V trivially (errors), so that d(V, X) is
exactly rho + eps. Every draw comes from a Philox generator keyed by
(seed, codeword index, trial), which makes trials independent of the order
in which they run.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .conf import get_setting
from .exceptions import ParameterError, ResampleExhaustedError
from .grassmann import Subspace
from .linalg import MatrixFq, matmul_arrays, rank, vstack

logger = logging.getLogger(__name__)

SEED_MASK = 2 ** 64 - 1


@dataclass(frozen=True)
class ChannelConfig:
    rho: int = 0
    eps: int = 0
    seed: int = 0
    max_resample: int = None

    def __post_init__(self):
        if self.rho < 0 or self.eps < 0:
            raise ParameterError(f'rho and eps must satisfy rho >= 0 and eps >= 0, got {self.rho}, {self.eps}')
        if self.max_resample is None:
            object.__setattr__(self, 'max_resample', get_setting('MAX_RESAMPLE'))
        if self.max_resample < 1:
            raise ParameterError(f'max_resample must satisfy max_resample >= 1, got {self.max_resample}')


def channel_rng(seed, index=0, trial=0):
    """Counter-based generator for one (seed, codeword index, trial) triple."""
    key = [int(seed) & SEED_MASK, int(index) & SEED_MASK, int(trial) & SEED_MASK]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def _full_rank(ctx, rng, rows, cols, max_resample, what):
    for attempt in range(1, max_resample + 1):
        m = MatrixFq.random(ctx, rng, rows, cols)
        if rank(m) == min(rows, cols):
            if attempt > 1:
                logger.debug('Drew a full-rank %s after %s attempts', what, attempt)
            return m
    raise ResampleExhaustedError(f'no full-rank {what} in {max_resample} draws')


def _draw(v, cfg, rng):
    """Packet matrix [H; E] before any recombination."""
    ctx = v.ctx
    k, n = v.dim, v.n
    if cfg.rho > k:
        raise ParameterError(f'rho must satisfy rho <= k = {k}, got {cfg.rho}')
    if k - cfg.rho + cfg.eps > n:
        raise ParameterError(f'rho and eps must satisfy k - rho + eps <= n = {n}')
    transfer = _full_rank(ctx, rng, k - cfg.rho, k, cfg.max_resample, 'transfer matrix')
    h = transfer @ v.basis
    for attempt in range(1, cfg.max_resample + 1):
        e = MatrixFq.random(ctx, rng, cfg.eps, n)
        if rank(vstack([v.basis, e])) == k + cfg.eps:
            if attempt > 1:
                logger.debug('Error space in general position after %s draws', attempt)
            return vstack([h, e])
    raise ResampleExhaustedError(
        f'no {cfg.eps}-dimensional error space meeting V trivially in {cfg.max_resample} draws')


def transmit(v, cfg, index=0, trial=0):
    """Received space X with dim X = k - rho + eps and d(V, X) = rho + eps."""
    packets = _draw(v, cfg, channel_rng(cfg.seed, index, trial))
    return Subspace(packets)


def received_packets(v, cfg, index=0, trial=0):
    """
    The packet matrix as it reaches the receiver: [H; E] recombined by a
    random invertible matrix, drawn after H and E from the same generator.
    """
    rng = channel_rng(cfg.seed, index, trial)
    packets = _draw(v, cfg, rng)
    if packets.rows == 0:
        return packets
    mixing = _full_rank(v.ctx, rng, packets.rows, packets.rows, cfg.max_resample, 'mixing matrix')
    return MatrixFq._wrap(v.ctx, matmul_arrays(v.ctx, mixing.array, packets.array))


def transmit_mixing(v, cfg, index=0, trial=0):
    """As transmit, after intermediate-node recombination; the received space is the same."""
    return Subspace(received_packets(v, cfg, index, trial))
