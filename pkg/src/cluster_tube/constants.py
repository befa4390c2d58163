"""Constants shared by the cluster_tube modules and the command line"""

# largest rank n accepted by pattern computations and verification suites
MAX_PATTERN_RANK = 8

# largest rank n accepted by the enumeration-only commands
MAX_ENUM_RANK = 12

# the hom oracle suite compares all pairs up to length factor * p
HOM_ORACLE_LENGTH_FACTOR = 2

# seed-count cap for a single pattern enumeration
DEFAULT_MAX_SEEDS = 20000

# environment variable selecting the worker count of the suites
THREADS_ENV_VAR = "CTUBE_THREADS"

# sentinel that stops a suite worker process
STOP_SENTINEL = "STOP"

# log line layout used by the command line (matches testing/pytest.ini)
LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# seconds between liveness checks while waiting on suite workers
WORKER_POLL_SECONDS = 1.0
