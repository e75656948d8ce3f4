from __future__ import annotations

import typing as t

import pytest

import grassmann_calculus as calculus
from grassmann_calculus import abc

P = calculus.Partition


class EchoCase(abc.BaseCase):  # pyright: ignore[reportMissingTypeArgument]
    def __call__(self, *args: t.Any, **kwargs: t.Any) -> t.Any:
        return self.callback(*args, **kwargs)

    def sweep(self, config: t.Any) -> t.Iterator[t.Dict[str, t.Any]]:
        yield from ()


@pytest.fixture()
def sample_case(sample_callback: t.Callable[..., t.Any]) -> calculus.Case[t.Any]:
    return calculus.Case(
        sample_callback,
        name=calculus.CaseName.SYT,
        sweep=lambda config: [{"r": 3, "partition": P([2, 1])}],
    )


# abc.BaseCase.__init__


def test_case_spec(sample_case: calculus.Case[t.Any]):
    assert sample_case.id_spec == "syt:{r}:{partition}"
    assert [param.name for param in sample_case.params] == ["r", "partition"]
    assert sample_case.__name__ == "sample_callback"
    assert repr(sample_case) == "<Case 'syt:{r}:{partition}'>"


@pytest.mark.parametrize("name", ["Delta", "f_1", "-syt", "", "two words"])
def test_case_name_invalid(sample_callback: t.Callable[..., t.Any], name: str):
    with pytest.raises(ValueError, match="Invalid case name"):
        EchoCase(sample_callback, name=name)


def test_case_custom_sep(sample_callback: t.Callable[..., t.Any]):
    case = EchoCase(sample_callback, name="echo", sep="|")

    assert case.id_spec == "echo|{r}|{partition}"
    assert case.build_case_id(r=1, partition=P([1])) == "echo|1|[1]"


# abc.BaseCase.build_case_id


def test_build_case_id(sample_case: calculus.Case[t.Any]):
    assert sample_case.build_case_id(r=3, partition=P([2, 1])) == "syt:3:[2,1]"
    assert sample_case.build_case_id(3, partition=P()) == "syt:3:[]"
    assert sample_case.build_case_id(3, P([4])) == "syt:3:[4]"


def test_build_case_id_overlap(sample_case: calculus.Case[t.Any]):
    with pytest.raises(TypeError, match="multiple values"):
        sample_case.build_case_id(3, r=3)


# abc.BaseCase.parse_case_id / convert_params / invoke


def test_parse_case_id(sample_case: calculus.Case[t.Any]):
    assert sample_case.parse_case_id("syt:3:[2,1]") == ("3", "[2,1]")


@pytest.mark.parametrize("case_id", ["delta:3:[2,1]", "syt:3", "syt:3:[2,1]:4", "syt"])
def test_parse_case_id_mismatch(sample_case: calculus.Case[t.Any], case_id: str):
    with pytest.raises(calculus.ConversionError):
        sample_case.parse_case_id(case_id)


def test_convert_params(sample_case: calculus.Case[t.Any]):
    assert sample_case.convert_params({"r": "2", "partition": [1, 1]}) == {"r": 2, "partition": P([1, 1])}

    with pytest.raises(calculus.ConversionError, match="requires a value"):
        sample_case.convert_params({"r": "2"})


def test_invoke(sample_case: calculus.Case[t.Any]):
    passed = sample_case.invoke("syt:3:[2,1]")
    failed = sample_case.invoke("syt:2:[2,1]")

    assert passed.passed
    assert passed.case_id == "syt:3:[2,1]"
    assert passed.params == {"r": 3, "partition": P([2, 1])}
    assert not failed.passed
    assert failed.residual == (1,)

    with pytest.raises(calculus.ConversionError):
        sample_case.invoke("syt:two:[2,1]")


def test_build_then_invoke_round_trip(sample_case: calculus.Case[t.Any]):
    for values in sample_case.sweep(calculus.SuiteConfig()):
        case_id = sample_case.build_case_id(**values)
        assert sample_case.invoke(case_id).params == values


def _capped_callback(*, r: int, cap: t.Optional[int] = None) -> t.Any:
    return (r, cap)


@pytest.mark.parametrize(
    ("kwargs", "case_id"),
    [
        ({"r": 3},              "echo:3"),
        ({"r": 3, "cap": None}, "echo:3"),
        ({"r": 3, "cap": 5},    "echo:3:5"),
    ],  # fmt: skip
)
def test_trailing_optional_omitted(kwargs: t.Dict[str, t.Any], case_id: str):
    case = EchoCase(_capped_callback, name="echo")

    assert case.build_case_id(**kwargs) == case_id
    assert case.invoke(case_id) == (3, kwargs.get("cap"))


def test_trailing_optional_mismatch():
    case = EchoCase(_capped_callback, name="echo")

    assert case.parse_case_id("echo:3") == ("3",)
    with pytest.raises(calculus.ConversionError):
        case.parse_case_id("echo")
    with pytest.raises(calculus.ConversionError):
        case.parse_case_id("echo:3:5:7")
