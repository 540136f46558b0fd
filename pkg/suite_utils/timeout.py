from functools import wraps
from queue import Queue
from threading import Thread


def _call_into(q, args, kwargs, method):
    try:
        q.put(method(*args, **kwargs))
    except BaseException as e:
        q.put(e)


def timeout(sec=10):
    """
    Fail the test once it runs longer than sec seconds. The worker thread
    cannot be killed; it is left running as a daemon.
    """
    def timeout_dec(func):
        @wraps(func)
        def test(*args, **kwargs):
            q = Queue()
            worker = Thread(target=_call_into, args=[q, args, kwargs, func], daemon=True)
            worker.start()
            worker.join(sec)
            if worker.is_alive():
                raise TimeoutError(f"{func.__name__} timed out after {sec} seconds")
            outcome = q.get()
            if isinstance(outcome, BaseException):
                raise outcome
            return outcome
        return test
    return timeout_dec
