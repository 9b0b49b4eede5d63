// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/server.hpp"

#include <chrono>
#include <deque>
#include <set>
#include <string_view>
#include <utility>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

namespace mecalog
{

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace
{

class Client
{
public:
  virtual ~Client() = default;
  virtual void send(std::string line) = 0;
  virtual void close() = 0;
};

}  // namespace

struct TelemetryServer::Impl : std::enable_shared_from_this<TelemetryServer::Impl>
{
  Impl(asio::io_context & io_ctx, TeleopSession s, ServerOptions o)
  : io(io_ctx), session(std::move(s)), opts(std::move(o)), tcp_acceptor(io_ctx),
    ws_acceptor(io_ctx), timer(io_ctx) {}

  void start();
  void stop();
  void accept_tcp();
  void accept_ws();
  void schedule_tick();
  void on_line(const std::shared_ptr<Client> & from, std::string_view line);
  void drop(const std::shared_ptr<Client> & c) {clients.erase(c);}

  asio::io_context & io;
  TeleopSession session;
  ServerOptions opts;
  tcp::acceptor tcp_acceptor;
  tcp::acceptor ws_acceptor;
  asio::steady_timer timer;
  std::chrono::steady_clock::time_point next_tick{};
  std::set<std::shared_ptr<Client>> clients;
  bool stopped{false};
};

namespace
{

class TcpClient : public Client, public std::enable_shared_from_this<TcpClient>
{
public:
  TcpClient(tcp::socket sock, std::weak_ptr<TelemetryServer::Impl> server, std::size_t max_line)
  : socket_(std::move(sock)), server_(std::move(server)), buf_(max_line) {}

  void start() {read();}

  void send(std::string line) override
  {
    const bool idle = outbox_.empty();
    outbox_.push_back(std::move(line));
    if (idle) {
      write();
    }
  }

  void close() override
  {
    boost::system::error_code ignored;
    socket_.shutdown(tcp::socket::shutdown_both, ignored);
    socket_.close(ignored);
  }

private:
  void read()
  {
    asio::async_read_until(socket_, buf_, '\n',
      [self = shared_from_this()](boost::system::error_code ec, std::size_t n) {
        auto server = self->server_.lock();
        if (!server) {
          return;
        }
        if (ec == asio::error::not_found) {
          // Line longer than the limit: report and hang up.
          self->send(wire::encode(wire::ErrorMsg{"MalformedMessage", "line too long"}));
          server->drop(self);
          return;
        }
        if (ec) {
          server->drop(self);
          return;
        }
        std::string line(asio::buffers_begin(self->buf_.data()),
        asio::buffers_begin(self->buf_.data()) + static_cast<std::ptrdiff_t>(n));
        self->buf_.consume(n);
        server->on_line(self, line);
        self->read();
      });
  }

  void write()
  {
    asio::async_write(socket_, asio::buffer(outbox_.front()),
      [self = shared_from_this()](boost::system::error_code ec, std::size_t) {
        if (ec) {
          if (auto server = self->server_.lock()) {
            server->drop(self);
          }
          return;
        }
        self->outbox_.pop_front();
        if (!self->outbox_.empty()) {
          self->write();
        }
      });
  }

  tcp::socket socket_;
  std::weak_ptr<TelemetryServer::Impl> server_;
  asio::streambuf buf_;
  std::deque<std::string> outbox_;
};

class WsClient : public Client, public std::enable_shared_from_this<WsClient>
{
public:
  WsClient(tcp::socket sock, std::weak_ptr<TelemetryServer::Impl> server, std::size_t max_line)
  : ws_(std::move(sock)), server_(std::move(server))
  {
    ws_.read_message_max(max_line);
    ws_.text(true);
  }

  void start()
  {
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
        auto server = self->server_.lock();
        if (!server) {
          return;
        }
        if (ec) {
          server->drop(self);
          return;
        }
        self->open_ = true;
        if (!self->outbox_.empty()) {
          self->write();
        }
        self->read();
      });
  }

  void send(std::string line) override
  {
    // One JSON object per frame; the newline terminator is a TCP framing detail.
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
    }
    const bool idle = outbox_.empty();
    outbox_.push_back(std::move(line));
    if (idle && open_) {
      write();
    }
  }

  void close() override
  {
    beast::error_code ignored;
    beast::get_lowest_layer(ws_).close(ignored);
  }

private:
  void read()
  {
    ws_.async_read(buf_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
        auto server = self->server_.lock();
        if (!server) {
          return;
        }
        if (ec) {
          server->drop(self);
          return;
        }
        const std::string text = beast::buffers_to_string(self->buf_.data());
        self->buf_.consume(self->buf_.size());
        server->on_line(self, text);
        self->read();
      });
  }

  void write()
  {
    ws_.async_write(asio::buffer(outbox_.front()),
      [self = shared_from_this()](beast::error_code ec, std::size_t) {
        if (ec) {
          if (auto server = self->server_.lock()) {
            server->drop(self);
          }
          return;
        }
        self->outbox_.pop_front();
        if (!self->outbox_.empty()) {
          self->write();
        }
      });
  }

  websocket::stream<tcp::socket> ws_;
  std::weak_ptr<TelemetryServer::Impl> server_;
  beast::flat_buffer buf_;
  std::deque<std::string> outbox_;
  bool open_{false};
};

void listen(tcp::acceptor & acc, const std::string & address, unsigned short port)
{
  const tcp::endpoint ep(asio::ip::make_address(address), port);
  acc.open(ep.protocol());
  acc.set_option(asio::socket_base::reuse_address(true));
  acc.bind(ep);
  acc.listen();
}

}  // namespace

void TelemetryServer::Impl::start()
{
  listen(tcp_acceptor, opts.bind_address, opts.tcp_port);
  if (opts.ws_port) {
    listen(ws_acceptor, opts.bind_address, *opts.ws_port);
    accept_ws();
  }
  accept_tcp();
  next_tick = std::chrono::steady_clock::now();
  schedule_tick();
}

void TelemetryServer::Impl::stop()
{
  if (stopped) {
    return;
  }
  stopped = true;
  boost::system::error_code ignored;
  tcp_acceptor.close(ignored);
  ws_acceptor.close(ignored);
  timer.cancel();
  for (const auto & c : clients) {
    c->close();
  }
  clients.clear();
}

void TelemetryServer::Impl::accept_tcp()
{
  tcp_acceptor.async_accept(
    [self = shared_from_this()](boost::system::error_code ec, tcp::socket sock) {
      if (self->stopped) {
        return;
      }
      if (!ec) {
        sock.set_option(tcp::no_delay(true));
        auto c = std::make_shared<TcpClient>(std::move(sock), self, self->opts.max_line_bytes);
        self->clients.insert(c);
        c->start();
      }
      self->accept_tcp();
    });
}

void TelemetryServer::Impl::accept_ws()
{
  ws_acceptor.async_accept(
    [self = shared_from_this()](boost::system::error_code ec, tcp::socket sock) {
      if (self->stopped) {
        return;
      }
      if (!ec) {
        auto c = std::make_shared<WsClient>(std::move(sock), self, self->opts.max_line_bytes);
        self->clients.insert(c);
        c->start();
      }
      self->accept_ws();
    });
}

void TelemetryServer::Impl::schedule_tick()
{
  const auto period = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
    std::chrono::duration<double>(session.config().dt));
  next_tick += period;
  timer.expires_at(next_tick);
  timer.async_wait([self = shared_from_this()](boost::system::error_code ec) {
      if (ec || self->stopped) {
        return;
      }
      if (auto snap = self->session.tick()) {
        const std::string line = wire::encode(*snap);
        // Copy: a failed send may drop the client from the set.
        const auto targets = self->clients;
        for (const auto & c : targets) {
          c->send(line);
        }
      }
      self->schedule_tick();
    });
}

void TelemetryServer::Impl::on_line(const std::shared_ptr<Client> & from, std::string_view line)
{
  if (line.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return;
  }
  if (auto err = session.handle_line(line)) {
    from->send(wire::encode(*err));
  }
}

TelemetryServer::TelemetryServer(asio::io_context & io, TeleopSession session, ServerOptions opts)
: impl_(std::make_shared<Impl>(io, std::move(session), std::move(opts))) {}

TelemetryServer::~TelemetryServer()
{
  impl_->stop();
}

void TelemetryServer::start() {impl_->start();}

void TelemetryServer::stop()
{
  // May be called from any thread; the work happens on the io thread.
  asio::post(impl_->io, [impl = impl_] {impl->stop();});
}

unsigned short TelemetryServer::tcp_port() const
{
  return impl_->tcp_acceptor.local_endpoint().port();
}

std::optional<unsigned short> TelemetryServer::ws_port() const
{
  if (!impl_->ws_acceptor.is_open()) {
    return std::nullopt;
  }
  return impl_->ws_acceptor.local_endpoint().port();
}

}  // namespace mecalog
