import logging


class RunConfig:
    """Configuration class for hypermatch."""

    def __init__(self):
        self.tol = 1e-10
        self.max_sweeps = 10000
        self.stall_window = 50
        self.leaf_budget = 10**9
        self.dp_bit_budget = 24
        self.ryser_max_size = 28
        self.hafnian_max_size = 20
        self.seed = 0
        self.output_format = "text"
        self.verbose = False

    def to_dict(self):
        """Convert config to dictionary."""
        return {
            "tol": self.tol,
            "max_sweeps": self.max_sweeps,
            "stall_window": self.stall_window,
            "leaf_budget": self.leaf_budget,
            "dp_bit_budget": self.dp_bit_budget,
            "ryser_max_size": self.ryser_max_size,
            "hafnian_max_size": self.hafnian_max_size,
            "seed": self.seed,
            "output_format": self.output_format,
            "verbose": self.verbose,
        }

    def update(self, **kwargs):
        """Update configuration with new values; a rejected update changes nothing."""
        previous = self.to_dict()
        try:
            for key, value in kwargs.items():
                if key not in previous:
                    raise ValueError(f"Unknown configuration key: {key}")
                setattr(self, key, value)
            self.validate()
        except (TypeError, ValueError):
            for key, value in previous.items():
                setattr(self, key, value)
            raise

    def validate(self):
        """Check that every field lies in its domain."""
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        for key in (
            "max_sweeps",
            "stall_window",
            "leaf_budget",
            "dp_bit_budget",
            "ryser_max_size",
            "hafnian_max_size",
        ):
            if int(getattr(self, key)) < 1:
                raise ValueError(f"{key} must be at least 1, got {getattr(self, key)}")
        if self.output_format not in ("text", "machine"):
            raise ValueError(
                f"Unsupported output format: {self.output_format}. Use 'text' or 'machine'."
            )
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def copy(self):
        """Return an independent copy of this configuration."""
        clone = RunConfig()
        clone.update(**self.to_dict())
        return clone


# Global configuration instance
config = RunConfig()


def resolve(name, value):
    """Return value, or the global default for name when value is None."""
    return getattr(config, name) if value is None else value


def apply_verbosity(verbose):
    """Switch the package logger between DEBUG and WARNING."""
    logging.getLogger("hypermatch").setLevel(
        logging.DEBUG if verbose else logging.WARNING
    )
