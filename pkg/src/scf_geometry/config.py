import dataclasses
import typing


@dataclasses.dataclass(frozen=True)
class Limits:
    """
    Tunable caps for the exhaustive sweeps and renderers.

    Functions that sweep accept an optional ``limits`` argument and fall back
    to :py:data:`DEFAULT_LIMITS`.
    """

    exhaustive_profile_n: int = 6
    """
    Largest society for which the profile oracles visit all ``3**n`` profiles.
    """
    table_sweep_n: int = 4
    """
    Largest society for which every one of the ``2**|G|`` grid functions is visited.
    """
    list_sweep_n: int = 16
    """
    Largest society for which every {a,b}-list is visited.
    """
    quota_sweep_n: int = 12
    """
    Largest society for which every quota sequence is converted and checked pointwise.
    """
    random_table_n: int = 40
    """
    Largest society for which random tables are drawn and checked.
    """
    random_samples: int = 100000
    """
    Largest number of random tables one run may check.
    """
    ascii_width: int = 60
    """
    Largest society :py:func:`scf_geometry.render.render_ascii` draws.
    """
    sample_size: int = 2000
    """
    Number of profiles drawn by the oracles in sampled mode.
    """
    seed: int = 0
    """
    Seed for every randomized mode.
    """

    def replace(self, **changes: typing.Any) -> "Limits":
        return dataclasses.replace(self, **changes)


DEFAULT_LIMITS = Limits()
