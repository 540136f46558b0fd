import abc


class InvalidValueException(Exception):
    pass


class Decorator(abc.ABC):
    """
    Stores a value on the test function under __<ClassName>__; the JSON
    runner hands it back to change_result for every test.
    """

    def __init__(self, v) -> None:
        problem = self.validate(v)
        if problem:
            raise InvalidValueException(problem)
        self.v = v

    def validate(self, v):
        return None

    def __call__(self, func):
        setattr(func, self.get_attr_name(), self.v)
        return func

    @classmethod
    def get_attr_name(cls):
        return f"__{cls.__name__}__"

    @classmethod
    @abc.abstractmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        """ saved_value is None when the test was not decorated """


class number(Decorator):
    """ @number("3.2"): test 2 of the module numbered 3 """

    def validate(self, v):
        if not isinstance(v, str) or not all(part.isdigit() for part in v.split(".")):
            return "Number should look like '3.2'."

    @classmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        if saved_value is not None:
            results["name"] = f"{saved_value}: {results['name']}"


class exhaustive(Decorator):
    """ a full parameter sweep; run_tests.py drops it unless --exhaustive """

    def __init__(self) -> None:
        self.v = True

    @classmethod
    def change_result(cls, saved_value, results: dict, output: str, err):
        if saved_value is not None:
            results["name"] = f"[SWEEP] {results['name']}"
        results["passed"] = err is None
