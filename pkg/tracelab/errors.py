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

"""Exceptions raised by tracelab.

Every error is a :class:`ValueError` so that callers which only care about
"bad input" can catch that.  The class name is reported by the command line
tools, so keep the names stable.
"""


class TracelabError(ValueError):
    """Base class for all tracelab domain errors."""

    @property
    def name(self):
        return type(self).__name__


class InvalidDocument(TracelabError):
    """A JSON document does not match its schema."""


class UnknownSort(TracelabError):
    pass


class UnknownGenerator(TracelabError):
    pass


class UnknownAction(TracelabError):
    pass


class AlphabetMismatch(TracelabError):
    """Two values are defined over different alphabets."""


class SignatureMismatch(TracelabError):
    """Two diagrams are defined over different monoidal graphs."""


class IncompatibleBoxImage(TracelabError):
    """A graph morphism does not preserve the boundary of a box."""


class EmptyComponent(TracelabError):
    """A distribution contains an empty location."""


class NotDistributedAlphabet(TracelabError):
    """A monoidal graph violates the distributed alphabet conditions."""


class SortsNotOrdinal(NotDistributedAlphabet):
    """The sorts are not exactly 1, 2, ..., k with k >= 1."""


class EmptyDistribution(SortsNotOrdinal):
    """The empty distribution has no location to become sort 1."""


class SortsOutOfOrder(NotDistributedAlphabet):
    """A boundary lists its sorts out of increasing order."""


class SortRepeated(NotDistributedAlphabet):
    """A sort appears more than once in a boundary."""


class SourceTargetMismatch(NotDistributedAlphabet):
    """A generator has different source and target words."""


class EmptyBoundary(NotDistributedAlphabet):
    """A generator has an empty source (and target)."""


class InvalidDiagram(TracelabError):
    """Dangling or doubly connected ports, sort clashes or cycles."""


class BoundaryMismatch(TracelabError):
    """The codomain of one diagram does not match the domain of the next."""


class NotAPermutation(TracelabError):
    pass


class BoundaryNotFull(TracelabError):
    """A diagram is not an endomorphism of the full boundary 1...n."""


class ProfileMismatch(TracelabError):
    """A state word does not match the sorts of a diagram boundary."""


class NotDeterministic(TracelabError):
    pass


class ReservedSortName(TracelabError):
    pass


class UnsupportedBoundaryLanguage(TracelabError):
    """Only single initial and final words are supported."""


class EnumerationOverflow(TracelabError):
    """An enumeration produced more results than the configured cap."""
