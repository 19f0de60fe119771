# Configuration and constants for gkgrowth
# Version information
VERSION = "1.2"
PROG_NAME = "gkgrowth"

# Problem file schema accepted by app.ProblemFile
SCHEMA_VERSION = 1

# Settings and logging files (next to the program, like the other config files)
SETTINGS_FILE = "gkgrowth_config.txt"
LOG_DIR = "logs"
LOG_FILE = "gkgrowth.log"

# Guards
POSET_NODE_LIMIT = 100_000
ENUMERATION_LIMIT = 10**8      # (p^N)^(n^2) matrices scanned by the oracle
ENUMERATION_CHUNK = 1 << 20    # codes decoded per numpy batch
MAX_MODULUS = 2**63            # p^N must fit a machine word

# Verification defaults
VERIFY_PRIMES = (2, 3)
VERIFY_MAX_N = 3
VERIFY_MAX_EXPONENT = 2        # largest N for the flag and cartan oracles
VERIFY_CARTAN_MAX_A = 3
VERIFY_LEVEL0_Q = (2, 3, 4, 5)
VERIFY_LEVEL0_MAX_EXPONENT = 6
VERIFY_IDENTITY_MAX_N = 6
VERIFY_IDENTITY_MAX_LEVEL = 5
VERIFY_WORKERS = 1
VERIFY_SUITES = ("flags", "cartan", "level0", "identities")

# Exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_SEMANTIC_ERROR = 3
EXIT_UNSUPPORTED = 4
EXIT_SIZE_LIMIT = 5

# Defaults for the user settings file
DEFAULT_SETTINGS = {
    "poset_node_limit": POSET_NODE_LIMIT,
    "enumeration_limit": ENUMERATION_LIMIT,
    "log_to_file": False,
    "verify_workers": VERIFY_WORKERS,
}
