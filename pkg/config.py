"""
Application Configuration
Centralized configuration for the bicomplex Fibonacci toolkit (CLI and web layer).
"""
import os

from dotenv import load_dotenv

load_dotenv()


def _env_range(name: str, default: tuple) -> tuple:
    """Read an inclusive integer range written as 'a..b' from the environment."""
    raw = os.getenv(name)
    if not raw:
        return default
    low, _, high = raw.partition('..')
    return (int(low), int(high or low))


class Config:
    """Base configuration class."""

    APP_NAME = "Bicomplex Fibonacci Toolkit"
    APP_VERSION = "1.0.0"

    # Default verification grids (inclusive), clipped to each claim's domain
    DEFAULT_N_RANGE = _env_range('BCF_N_RANGE', (0, 60))
    DEFAULT_M_RANGE = _env_range('BCF_M_RANGE', (0, 60))
    DEFAULT_R_RANGE = _env_range('BCF_R_RANGE', (1, 12))
    DEFAULT_COMPONENT_RANGE = _env_range('BCF_COMPONENT_RANGE', (-1, 1))

    # Verification fan-out (threads over claims)
    VERIFY_WORKERS = int(os.getenv('BCF_VERIFY_WORKERS', '1'))

    # Benchmark: plain iteration is skipped above this index
    BENCH_ITERATION_THRESHOLD = int(os.getenv('BCF_BENCH_THRESHOLD', '100000'))

    # Significant digits of the displayed real modulus
    MODULUS_DIGITS = 15

    # Data File Paths
    REPORT_FILE = os.getenv('BCF_REPORT_FILE', 'data/report.json')

    LOG_LEVEL = os.getenv('BCF_LOG_LEVEL', 'WARNING')

    DEBUG = os.getenv('FLASK_DEBUG', 'False').lower() == 'true'
    TESTING = False

    @classmethod
    def default_ranges(cls) -> dict:
        """Default inclusive range per parameter name."""
        ranges = {
            'n': cls.DEFAULT_N_RANGE,
            'm': cls.DEFAULT_M_RANGE,
            'r': cls.DEFAULT_R_RANGE,
        }
        for name in ('a1', 'b1', 'c1', 'd1', 'a2', 'b2', 'c2', 'd2'):
            ranges[name] = cls.DEFAULT_COMPONENT_RANGE
        return ranges


class DevelopmentConfig(Config):
    """Development environment configuration."""
    DEBUG = True
    LOG_LEVEL = os.getenv('BCF_LOG_LEVEL', 'INFO')


class TestingConfig(Config):
    """Test configuration: small grids keep the suites fast."""
    TESTING = True
    DEFAULT_N_RANGE = (0, 20)
    DEFAULT_M_RANGE = (0, 8)
    DEFAULT_R_RANGE = (1, 5)
    BENCH_ITERATION_THRESHOLD = 5000


class ProductionConfig(Config):
    """Production environment configuration."""
    DEBUG = False


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config
}
