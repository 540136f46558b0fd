import unittest

from suite_utils.decorators import number
from data_structures.linked_stack import LinkedStack


class TestLinkedStack(unittest.TestCase):

    @number("9.1")
    def test_push_pop(self):
        s = LinkedStack()
        self.assertTrue(s.is_empty())
        for x in range(5):
            s.push(x)
        self.assertEqual(len(s), 5)
        self.assertEqual(s.peek(), 4)
        self.assertEqual(list(s), [4, 3, 2, 1, 0])
        self.assertEqual([s.pop() for _ in range(5)], [4, 3, 2, 1, 0])
        self.assertTrue(s.is_empty())

    @number("9.2")
    def test_empty(self):
        s = LinkedStack()
        with self.assertRaises(IndexError):
            s.pop()
        with self.assertRaises(IndexError):
            s.peek()
        s.push((0, 1))
        s.clear()
        self.assertEqual(len(s), 0)
        self.assertIsNone(s.top)

    @number("9.3")
    def test_push_all(self):
        s = LinkedStack()
        s.push((0,))
        s.push_all((0, w) for w in (3, 2, 1))
        self.assertEqual(len(s), 4)
        self.assertEqual(s.pop(), (0, 1))
        self.assertEqual(list(s), [(0, 2), (0, 3), (0,)])
        s.push_all([])
        self.assertEqual(len(s), 3)


if __name__ == '__main__':
    unittest.main()
