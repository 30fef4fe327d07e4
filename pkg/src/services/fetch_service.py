"""
远程图文件获取服务
通过 HTTP(S) 下载 graph6 / DIMACS / edgelist 文件
"""
import sys

import requests

from errors import FetchFailed


class GraphFetchService:
    """远程图文件下载类"""

    TIMEOUT = 30

    def __init__(self, session=None):
        self.session = session or requests.Session()

    def fetch(self, url):
        """
        下载一个图文件

        Args:
            url: http(s) 地址

        Returns:
            bytes: 响应内容

        Raises:
            FetchFailed: 网络错误或非 2xx 响应
        """
        try:
            print(f"正在获取 {url} ...", file=sys.stderr)
            response = self.session.get(url, timeout=self.TIMEOUT)
            response.raise_for_status()
            print(f"✓ 成功获取 {len(response.content)} 字节", file=sys.stderr)
            return response.content
        except requests.exceptions.RequestException as e:
            print(f"✗ 网络请求失败: {e}", file=sys.stderr)
            raise FetchFailed(url, type(e).__name__)
