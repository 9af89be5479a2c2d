# Copyright 2026 The prescheck Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for prescheck.

Graphs are passed as graph documents: dicts with "order" and "edges" and,
optionally, "labels", "partition", "k" and "flip".
"""

from ._prescheck import (
    Error,
    EvaluationError,
    InvalidArgument,
    NotAModelError,
    ParseError,
    SizeLimitExceeded,
    __version__,
    apply_flip,
    bottleneck_cover,
    build_gadget,
    build_gadget_prefix,
    build_h,
    build_half_graph,
    check_minimal,
    check_phi,
    count_embeddings,
    eval_clique_expression,
    eval_sc_tree,
    evaluate,
    find_embeddings,
    flip_sum,
    flipflat_probe,
    hn_clique_expression,
    phi_source,
    preservation_fuzz,
    run_cli,
    theorem_constants,
    translate_flip,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
