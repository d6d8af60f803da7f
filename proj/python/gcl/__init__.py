# Copyright 2026 The gcl Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Concept lattices over generalised attributes."""

import json as _json

from ._gcl import (
    CapExceeded,
    FormalContext,
    InvalidArgument,
    ParseError,
    context_digest,
    evaluate,
    export_lattice,
    parse_context,
    random_context,
    run_cli,
)
from ._gcl import verify as _verify


def lattice(context, kind="gcl"):
    """The lattice as a dict in the JSON export shape."""
    return _json.loads(export_lattice(context, kind, "json"))


def verify(context):
    """The law and oracle report as a dict."""
    return _json.loads(_verify(context))


__all__ = [
    "CapExceeded",
    "FormalContext",
    "InvalidArgument",
    "ParseError",
    "context_digest",
    "evaluate",
    "export_lattice",
    "lattice",
    "parse_context",
    "random_context",
    "run_cli",
    "verify",
]
