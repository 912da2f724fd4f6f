"""
Configuration settings for the filiform cohomology toolkit
"""
import os
from dotenv import load_dotenv
from galois import is_prime

from exceptions import CharTooSmall, NotPrime, PrimeTooLarge

# Load environment variables
load_dotenv()


class Config:
    """Configuration class for the filiform cohomology toolkit"""

    # Prime range (the *-property fold costs 2^(p-2) per addition step)
    MIN_PRIME = 5
    MAX_PRIME = int(os.getenv("FILIFORM_MAX_PRIME", "13"))

    # Output Configuration
    OUTPUT_FORMAT = os.getenv("FILIFORM_OUTPUT_FORMAT", "text")
    SUPPORTED_FORMATS = ["text", "json", "latex"]

    # Verification Configuration
    DEFAULT_SEED = int(os.getenv("FILIFORM_SEED", "0"))
    AXIOM_SAMPLES = int(os.getenv("FILIFORM_AXIOM_SAMPLES", "6"))

    # Evaluation of maps with the *-property: "collected" or "enumerate"
    OMEGA_METHOD = os.getenv("FILIFORM_OMEGA_METHOD", "collected")

    LOG_LEVEL = os.getenv("FILIFORM_LOG_LEVEL", "WARNING")

    @classmethod
    def validate_prime(cls, p: int, max_prime: int = None) -> int:
        """Validate a prime for algebra constructions"""
        if max_prime is None:
            max_prime = cls.MAX_PRIME
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p < cls.MIN_PRIME:
            raise CharTooSmall(f"characteristic {p} is below {cls.MIN_PRIME}")
        if p > max_prime:
            raise PrimeTooLarge(f"prime {p} exceeds the configured maximum {max_prime}")
        return p

    @classmethod
    def validate_config(cls):
        """Validate that configured values are usable"""
        if cls.OUTPUT_FORMAT not in cls.SUPPORTED_FORMATS:
            raise ValueError(f"Unsupported output format: {cls.OUTPUT_FORMAT}")
        if cls.OMEGA_METHOD not in ("collected", "enumerate"):
            raise ValueError(f"Unsupported omega method: {cls.OMEGA_METHOD}")
        if cls.MAX_PRIME < cls.MIN_PRIME:
            raise ValueError("FILIFORM_MAX_PRIME must be at least 5")
        return True
