"""
远程图文件获取（用假的 requests session，不访问网络）
"""
import pytest
import requests

from errors import FetchFailed
from services import GraphFetchService, load_graph


class FakeResponse:
    def __init__(self, content, status=200):
        self.content = content
        self.status_code = status

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.exceptions.HTTPError(f"{self.status_code} error")


class FakeSession:
    def __init__(self, response=None, error=None):
        self.response = response
        self.error = error
        self.calls = []

    def get(self, url, timeout=None):
        self.calls.append((url, timeout))
        if self.error is not None:
            raise self.error
        return self.response


def test_fetch_graph6(c5):
    session = FakeSession(FakeResponse(b"Dhc\n"))
    fetcher = GraphFetchService(session=session)
    assert load_graph("https://example.org/graphs/c5.g6", fetcher=fetcher) == c5
    assert session.calls == [("https://example.org/graphs/c5.g6", 30)]


def test_fetch_detects_by_extension_before_query(p3):
    session = FakeSession(FakeResponse(b"p edge 3 2\ne 1 2\ne 2 3\n"))
    g = load_graph("http://example.org/p3.col?raw=1", fetcher=GraphFetchService(session=session))
    assert g == p3


def test_http_error():
    session = FakeSession(FakeResponse(b"", status=404))
    with pytest.raises(FetchFailed) as exc:
        GraphFetchService(session=session).fetch("https://example.org/missing.g6")
    assert exc.value.exit_code == 2
    assert exc.value.reason == "HTTPError"


def test_connection_error():
    session = FakeSession(error=requests.exceptions.ConnectionError("refused"))
    with pytest.raises(FetchFailed):
        GraphFetchService(session=session).fetch("https://example.org/c5.g6")
