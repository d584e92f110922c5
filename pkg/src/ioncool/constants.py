"""
Application-wide constants for ioncool
"""

from scipy import constants as _sc

# Physical constants (CODATA via scipy.constants)
HBAR = _sc.hbar
K_B = _sc.k
ELEMENTARY_CHARGE = _sc.e
ATOMIC_MASS = _sc.atomic_mass
EPSILON_0 = _sc.epsilon_0
ELECTRON_VOLT = _sc.electron_volt

# Numerical tolerances
HERMITIAN_TOL = 1e-12
STATE_NORM_TOL = 1e-10
TRACE_TOL = 1e-8
POSITIVITY_TOL = 1e-8
POPULATION_TOL = 1e-8
STEADY_STATE_RESIDUAL_TOL = 1e-10
NULL_SPACE_RTOL = 1e-12

# Integrator defaults
RK_RTOL = 1e-9
RK_ATOL = 1e-12
RK_METHOD = "DOP853"
EXPM_SUPEROPERATOR_MAX_DIM = 1024  # (Hilbert dimension)**2
SCHRODINGER_STEP_TOL = 1e-10
MIN_STEP = 1e-14

# Truncation policy
TRUNCATION_MIN_MARGIN = 5
TRUNCATION_ETA_FACTOR = 3.0
TRUNCATION_OVERFLOW_THRESHOLD = 1e-4

# Doppler model
DEFAULT_SATURATION = 0.1
DEFAULT_DETUNING_LINEWIDTHS = -0.5
DEFAULT_EMISSION_PROJECTION = 1.0

# Lamb-Dicke regime check: warn when η√(2n̄+1) exceeds this
LAMB_DICKE_WARNING_THRESHOLD = 0.5

# Emission recoil: mean squared projection of a dipole pattern on the trap axis
RECOIL_PATTERN_FACTOR = 0.4

# Chain modes
NEWTON_MAX_ITERATIONS = 100
NEWTON_TOL = 1e-14

# EIT cooling assessment
EIT_GRID_MAX_GAP = 0.02  # units of the linewidth

# Output formatting
CSV_FLOAT_FORMAT = "%.17g"
CSV_LINE_TERMINATOR = "\n"
MANIFEST_FILENAME = "manifest.json"
RESULT_FILENAME = "result.json"
SWEEP_FILENAME = "sweep.csv"

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

# Runtime settings
DEFAULT_THREADS = 1
DEFAULT_OUTPUT_DIR = "output"
DEFAULT_LOG_LEVEL = "INFO"

# Valid configuration values
VALID_EXPERIMENTS = [
    "doppler",
    "doppler-limit",
    "resistive",
    "sideband-cool",
    "eit-spectrum",
    "magic",
    "chain-modes",
    "multimode-cool",
    "rabi-flop",
]
VALID_BRANCHES = ["carrier", "blue", "red"]
VALID_SIDEBAND_MODES = ["rwa", "full"]
