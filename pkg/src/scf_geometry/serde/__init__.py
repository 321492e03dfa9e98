from .codec import (  # noqa
    decode_ablist,
    decode_function,
    decode_quotas,
    encode_ablist,
    encode_function,
    encode_quotas,
)
from .exceptions import DeserializationError, ValidationProblem  # noqa
