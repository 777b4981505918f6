# Copyright 2024 The tracelab authors
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

"""
String diagrams, Mazurkiewicz traces and their automata.

Diagrams over a distributed alphabet whose domain and codomain are the
full boundary are exactly traces.  This package implements both sides,
the isomorphism between them, symmetric monoidal and asynchronous
automata, and serialization through premonoidal runtime diagrams.
"""

from .version import __version__
from . import errors
from .errors import *
from .signature import Box, MonoidalGraph, GraphMorphism, DistributedAlphabet, IndependenceRelation, \
    Distribution, validate_graph_morphism, validate_distributed_alphabet, loc, \
    independence_to_distribution, distribution_to_independence, distribution_leq, \
    distribution_to_alphabet, alphabet_to_distribution
from .diagram import Diagram, Port, identity, generator, symmetry, compose, tensor, \
    permutation_diagram, equals, canonical_form, build_N, to_generator_sequence
from .trace import Trace, quotient_word, trace_equals, trace_concat, serializations, \
    trace_to_diagram, diagram_to_trace
from .grammar import Grammar, grammar_to_automaton, membership
from .automata import StateWord, MonoidalAutomaton, AsyncAutomaton, eval_diagram, accepts, \
    is_deterministic, async_step, async_accepts_word, async_accepts_trace, async_to_monoidal, \
    monoidal_to_async
from .premonoidal import RUNTIME_SORT, RuntimeGraph, PremonoidalDiagram, runtime_graph, \
    word_to_premonoidal, erase_runtime, whisker_left, whisker_right, serialization_preimage

__all__ = ['__version__',
           'Box', 'MonoidalGraph', 'GraphMorphism', 'DistributedAlphabet', 'IndependenceRelation', 'Distribution',
           'validate_graph_morphism', 'validate_distributed_alphabet', 'loc',
           'independence_to_distribution', 'distribution_to_independence', 'distribution_leq',
           'distribution_to_alphabet', 'alphabet_to_distribution',
           'Diagram', 'Port', 'identity', 'generator', 'symmetry', 'compose', 'tensor',
           'permutation_diagram', 'equals', 'canonical_form', 'build_N', 'to_generator_sequence',
           'Trace', 'quotient_word', 'trace_equals', 'trace_concat', 'serializations',
           'trace_to_diagram', 'diagram_to_trace',
           'Grammar', 'grammar_to_automaton', 'membership',
           'StateWord', 'MonoidalAutomaton', 'AsyncAutomaton', 'eval_diagram', 'accepts',
           'is_deterministic', 'async_step', 'async_accepts_word', 'async_accepts_trace',
           'async_to_monoidal', 'monoidal_to_async',
           'RUNTIME_SORT', 'RuntimeGraph', 'PremonoidalDiagram', 'runtime_graph',
           'word_to_premonoidal', 'erase_runtime', 'whisker_left', 'whisker_right',
           'serialization_preimage']
__all__ += [name for name, obj in vars(errors).items()
            if isinstance(obj, type) and issubclass(obj, errors.TracelabError)]
