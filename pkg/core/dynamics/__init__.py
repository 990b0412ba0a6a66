from .integrator import rk4_step, integrate, trajectory
from .lock_detector import LockVerdict, detect_lock, detect_lock_batch, observe_lock, settle, DEFAULT_MAX_TRANSIENT
from .system import SystemConfig, PhaseState, PhaseArray, velocity_field, winding_number, \
    DEFAULT_DT, DEFAULT_TRANSIENT_TIME, DEFAULT_OBSERVATION_TIME, DEFAULT_LOCK_TOLERANCE

__all__ = ['rk4_step', 'integrate', 'trajectory', 'LockVerdict', 'detect_lock', 'detect_lock_batch',
           'observe_lock', 'settle', 'DEFAULT_MAX_TRANSIENT', 'SystemConfig', 'PhaseState', 'PhaseArray',
           'velocity_field', 'winding_number', 'DEFAULT_DT', 'DEFAULT_TRANSIENT_TIME',
           'DEFAULT_OBSERVATION_TIME', 'DEFAULT_LOCK_TOLERANCE']
