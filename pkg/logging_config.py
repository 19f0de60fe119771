# Logging configuration for gkgrowth
#
# Diagnostics go to stderr so that results printed on stdout stay pipeable.
import os
import sys
import logging
from config import LOG_DIR, LOG_FILE

logger = logging.getLogger("gkgrowth")


def setup_logging(verbose=False, log_to_file=False, log_file=None):
    """Setup logging to stderr and, optionally, to a log file next to the program"""
    try:
        handlers = []
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter('%(message)s'))
        handlers.append(console)

        if log_to_file or log_file:
            if log_file is None:
                if getattr(sys, 'frozen', False):
                    app_dir = os.path.dirname(sys.executable)
                else:
                    app_dir = os.path.dirname(os.path.abspath(__file__))
                log_dir = os.path.join(app_dir, LOG_DIR)
                os.makedirs(log_dir, exist_ok=True)
                log_file = os.path.join(log_dir, LOG_FILE)
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setFormatter(logging.Formatter('%(asctime)s - %(message)s'))
            handlers.append(file_handler)

        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            handlers=handlers,
            force=True,
        )
        return True
    except Exception as e:
        print(f"Failed to setup logging: {e}", file=sys.stderr)
        return False


def log_poset_built(node_count, edge_count):
    """Log the size of a computed Hasse diagram"""
    logger.info(f"POSET: {node_count} nodes, {edge_count} Hasse edges")


def log_enumeration(n, p, N, count):
    """Log a finished GL_n(Z/p^N) enumeration"""
    logger.info(f"ENUMERATION: GL_{n}(Z/{p}^{N}) has {count} elements")


def log_check_result(suite, name, passed):
    """Log one verification check"""
    status = "PASS" if passed else "FAIL"
    logger.info(f"CHECK {suite}: {name} {status}")


def log_threshold_warning(N, threshold):
    """Warn that an explicit growth polynomial is evaluated below its validity bound"""
    logger.warning(f"THRESHOLD: N={N} is below the declared validity threshold N0={threshold}; "
                   f"the value may not equal dim pi^(K_N)")


def log_ramified_exponents(n, j):
    """Warn about fractional q-exponents in the totally ramified formula"""
    logger.warning(f"RAMIFIED: n={n}, j={j} gives q-exponents outside Z; result kept in s = q^(1/{2 * n})")


def log_warning(message):
    """Log warning messages"""
    logger.warning(message)


def log_error(message):
    """Log error messages"""
    logger.error(f"ERROR: {message}")


def log_debug(message):
    """Log debug messages"""
    logger.debug(f"DEBUG: {message}")
