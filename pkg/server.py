"""
Threaded TCP location server.

Each connection gets its own thread. The radio map and its index are shared
read-only; a request never mutates server state, and a bad request line is
answered with an ERR line without closing the connection.
"""

import signal
import socketserver
import threading

from errors import InvalidInputError, LocatorError, ProtocolError
from locator import Locator
from logger import Logger
from models import RadioMap
from protocol import (
    DEFAULT_BIND,
    ERR_BAD_K,
    ERR_BAD_SCAN,
    ERR_INTERNAL,
    ERR_PARSE,
    ErrorReply,
    LocateReply,
    decode_request,
    encode_response,
    parse_address,
)
from search import DEFAULT_LEAF_SIZE

MAX_LINE_BYTES = 64 * 1024


class LocationRequestHandler(socketserver.StreamRequestHandler):
    """Reads request lines until the client disconnects."""

    server: 'LocationServer'

    def handle(self):
        logger = self.server.logger
        logger.info(f"Connection from {self.client_address[0]}:{self.client_address[1]}")
        try:
            while True:
                raw = self.rfile.readline(MAX_LINE_BYTES)
                if not raw:
                    break
                if not raw.endswith(b'\n') and len(raw) >= MAX_LINE_BYTES:
                    # Over-long line: swallow the rest so it still earns one reply.
                    while raw and not raw.endswith(b'\n'):
                        raw = self.rfile.readline(MAX_LINE_BYTES)
                    reply = ERR_PARSE
                    logger.warning(f"Rejected over-long request from {self.client_address[0]}")
                else:
                    reply = self.server.answer(raw)
                self.wfile.write((encode_response(reply) + '\n').encode('utf-8'))
                self.wfile.flush()
        except (ConnectionError, OSError) as e:
            logger.warning(f"Connection from {self.client_address[0]} dropped: {e}")
        logger.info(f"Connection from {self.client_address[0]}:{self.client_address[1]} closed")


class LocationServer(socketserver.ThreadingTCPServer):
    """Answers LOCATE requests against one shared Locator."""

    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address: tuple[str, int], locator: Locator, epsilon: float = 0.0,
                 logger: Logger | None = None):
        self.locator = locator
        self.epsilon = epsilon
        self.logger = logger or Logger()
        super().__init__(address, LocationRequestHandler)

    @property
    def address(self) -> tuple[str, int]:
        host, port = self.server_address[:2]
        return host, port

    def answer(self, raw: bytes) -> LocateReply | ErrorReply:
        """Reply for one raw request line; never raises."""
        try:
            line = raw.decode('utf-8').rstrip('\n').rstrip('\r')
            request = decode_request(line)
            if request.k < 1:
                return ERR_BAD_K
            estimate = self.locator.locate(request.to_observation(), request.k, self.epsilon)
            return LocateReply.from_estimate(estimate)
        except (UnicodeDecodeError, ProtocolError) as e:
            self.logger.warning(f"Rejected request: {e}")
            return ERR_PARSE
        except InvalidInputError as e:
            self.logger.warning(f"Rejected request: {e}")
            return ERR_BAD_SCAN
        except LocatorError as e:
            self.logger.error(f"Error answering request: {e}")
            return ERR_INTERNAL
        except Exception as e:
            # Safety net: a request must never take the server down.
            self.logger.error(f"Unexpected error answering request: {e}")
            return ERR_INTERNAL


def start_server(locator: Locator, bind: str, epsilon: float = 0.0,
                 logger: Logger | None = None) -> tuple[LocationServer, threading.Thread]:
    """Bind and serve from a background thread; returns the server and its thread.

    Bind failures raise OSError before any thread starts. Use port 0 for an
    ephemeral port and read it back from server.address.
    """
    server = LocationServer(parse_address(bind), locator, epsilon=epsilon, logger=logger)
    thread = threading.Thread(target=server.serve_forever, name='location-server', daemon=True)
    thread.start()
    return server, thread


def _raise_interrupt(signum, frame):
    raise KeyboardInterrupt


def serve(radio_map: RadioMap, bind: str = DEFAULT_BIND, epsilon: float = 0.0,
          search: str = 'kdtree', leaf_size: int = DEFAULT_LEAF_SIZE,
          logger: Logger | None = None) -> None:
    """Serve in the foreground until SIGINT or SIGTERM."""
    logger = logger or Logger()
    locator = Locator(radio_map, search=search, leaf_size=leaf_size)
    with LocationServer(parse_address(bind), locator, epsilon=epsilon, logger=logger) as server:
        host, port = server.address
        logger.info(f"Listening on {host}:{port} ({len(radio_map)} map entries, "
                    f"search={locator.index.name}, epsilon={epsilon})")
        if threading.current_thread() is threading.main_thread():
            signal.signal(signal.SIGTERM, _raise_interrupt)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            logger.info("Shutting down")
