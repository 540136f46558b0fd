"""
    Unbounded stack over linked nodes. The iterative searches keep their
    DFS frames on one; cycle enumeration pushes whole path prefixes.
"""

__docformat__ = 'reStructuredText'

from typing import Generic, Iterable, Iterator, Optional, TypeVar

T = TypeVar('T')


class Node(Generic[T]):
    """
        Attributes:
            item (T): payload
            link (Node[T]): node below this one
    """

    def __init__(self, item: T, link: Optional["Node[T]"] = None) -> None:
        self.item = item
        self.link = link


class LinkedStack(Generic[T]):
    """ LIFO container with O(1) push and pop and no capacity limit. """

    def __init__(self) -> None:
        self.top: Optional[Node[T]] = None
        self.length = 0

    def __len__(self) -> int:
        return self.length

    def is_empty(self) -> bool:
        return self.top is None

    def clear(self) -> None:
        """ :complexity: O(1) """
        self.top = None
        self.length = 0

    def push(self, item: T) -> None:
        """ :complexity: O(1) """
        self.top = Node(item, self.top)
        self.length += 1

    def push_all(self, items: Iterable[T]) -> None:
        """ Push in order, so the last item ends on top. """
        for item in items:
            self.push(item)

    def pop(self) -> T:
        """
            :complexity: O(1)
            :raises IndexError: if the stack is empty
        """
        if self.top is None:
            raise IndexError('pop from empty stack')
        item = self.top.item
        self.top = self.top.link
        self.length -= 1
        return item

    def peek(self) -> T:
        """ :raises IndexError: if the stack is empty """
        if self.top is None:
            raise IndexError('peek on empty stack')
        return self.top.item

    def __iter__(self) -> Iterator[T]:
        """ Items from the top down. """
        node = self.top
        while node is not None:
            yield node.item
            node = node.link
