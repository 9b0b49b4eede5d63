// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "mecalog/teleop.hpp"

namespace boost::asio
{
class io_context;
}

namespace mecalog
{

struct ServerOptions
{
  std::string bind_address{"127.0.0.1"};
  unsigned short tcp_port{7070};            ///< 0 picks an ephemeral port
  std::optional<unsigned short> ws_port{};  ///< WebSocket endpoint for browser clients
  std::size_t max_line_bytes{64 * 1024};
};

/**
 * Teleoperation service. Runs the session in real time on the io_context
 * thread, streams state snapshots to every client and feeds client lines to
 * the session. Raw TCP clients exchange newline-terminated JSON; WebSocket
 * clients send and receive one JSON object per text frame.
 *
 * The io_context must be run by a single thread.
 */
class TelemetryServer
{
public:
  TelemetryServer(boost::asio::io_context & io, TeleopSession session, ServerOptions opts = {});
  ~TelemetryServer();

  TelemetryServer(const TelemetryServer &) = delete;
  TelemetryServer & operator=(const TelemetryServer &) = delete;

  /// Binds, listens and starts the sim ticker. Throws on bind failure.
  void start();
  /// Closes listeners, clients and the ticker; io.run() returns once drained.
  void stop();

  unsigned short tcp_port() const;
  std::optional<unsigned short> ws_port() const;

  struct Impl;

private:
  std::shared_ptr<Impl> impl_;
};

}  // namespace mecalog
