"""Error types shared across the engine."""


class ConfigError(Exception):
    """Invalid engine configuration, catalog, or parameter file."""


class ScenarioError(Exception):
    """Malformed scenario file or scenario event."""
