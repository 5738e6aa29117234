"""
Client half of the location service.
"""

import socket

from errors import ProtocolError, ServiceError, TransportError
from models import PositionEstimate, ScanObservation
from protocol import ErrorReply, LocateRequest, decode_response, encode_request, parse_address

DEFAULT_TIMEOUT = 5.0


class LocationClient:
    """One connection to a location server; several requests may share it."""

    def __init__(self, address: str, timeout: float = DEFAULT_TIMEOUT):
        self.address = address
        self.timeout = timeout
        self._sock: socket.socket | None = None
        self._rfile = None

    def connect(self) -> 'LocationClient':
        try:
            self._sock = socket.create_connection(parse_address(self.address), timeout=self.timeout)
        except OSError as e:
            raise TransportError(f"cannot reach location server at {self.address}: {e}") from e
        self._rfile = self._sock.makefile('rb')
        return self

    def close(self) -> None:
        if self._rfile is not None:
            self._rfile.close()
            self._rfile = None
        if self._sock is not None:
            self._sock.close()
            self._sock = None

    def __enter__(self) -> 'LocationClient':
        return self.connect()

    def __exit__(self, *exc_info) -> None:
        self.close()

    def send_line(self, line: str) -> str:
        """Send one raw request line and return the raw response line."""
        if self._sock is None:
            self.connect()
        try:
            self._sock.sendall((line + '\n').encode('utf-8'))
            raw = self._rfile.readline()
        except OSError as e:
            raise TransportError(f"connection to {self.address} failed: {e}") from e
        if not raw.endswith(b'\n'):
            raise TransportError(f"connection to {self.address} closed before a response arrived")
        return raw.decode('utf-8').rstrip('\n').rstrip('\r')

    def locate(self, obs: ScanObservation, k: int) -> PositionEstimate:
        line = self.send_line(encode_request(LocateRequest.from_observation(obs, k)))
        try:
            reply = decode_response(line)
        except ProtocolError as e:
            raise TransportError(f"unreadable response from {self.address}: {e}") from e
        if isinstance(reply, ErrorReply):
            raise ServiceError(reply.code, reply.reason)
        return reply.to_estimate()


def request_locate(address: str, obs: ScanObservation, k: int,
                   timeout: float = DEFAULT_TIMEOUT) -> PositionEstimate:
    """Ask the server at address to locate one scan."""
    with LocationClient(address, timeout=timeout) as client:
        return client.locate(obs, k)
