//! Line-delimited JSON service: one session per connection.

use std::io::{self, BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::thread;

use serde::{Deserialize, Serialize};

use super::{parse_line, Session, Snapshot};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ClientMessage {
    Open { source: String },
    /// A single script line.
    Command { command: String },
    Snapshot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ServerMessage {
    Snapshot(Snapshot),
    Error { message: String },
}

fn error(message: impl ToString) -> ServerMessage {
    ServerMessage::Error { message: message.to_string() }
}

/// Answers one request line. A failed request leaves the session as it was.
pub fn handle_message(session: &mut Option<Session>, line: &str) -> ServerMessage {
    let msg: ClientMessage = match serde_json::from_str(line) {
        Ok(m) => m,
        Err(e) => return error(format!("malformed message: {e}")),
    };
    match msg {
        ClientMessage::Open { source } => match Session::open(&source) {
            Ok(s) => ServerMessage::Snapshot(session.insert(s).snapshot()),
            Err(diags) => error(diags.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")),
        },
        ClientMessage::Command { command } => {
            let Some(s) = session.as_mut() else { return error("no document open") };
            let cmd = match parse_line(&command) {
                Ok(Some(c)) => c,
                Ok(None) => return error("empty command"),
                Err(e) => return error(e),
            };
            match s.apply(&cmd) {
                Ok(_) => ServerMessage::Snapshot(s.snapshot()),
                Err(e) => error(e),
            }
        }
        ClientMessage::Snapshot => match session {
            Some(s) => ServerMessage::Snapshot(s.snapshot()),
            None => error("no document open"),
        },
    }
}

fn handle_connection(stream: TcpStream) -> io::Result<()> {
    let mut writer = stream.try_clone()?;
    let mut session = None;
    for line in BufReader::new(stream).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let reply = handle_message(&mut session, &line);
        let mut out = serde_json::to_string(&reply).map_err(io::Error::other)?;
        out.push('\n');
        writer.write_all(out.as_bytes())?;
        writer.flush()?;
    }
    Ok(())
}

/// Serves connections until the listener fails.
pub fn serve(listener: TcpListener) -> io::Result<()> {
    for stream in listener.incoming() {
        let stream = stream?;
        thread::spawn(move || {
            if let Err(e) = handle_connection(stream) {
                eprintln!("connection closed: {e}");
            }
        });
    }
    Ok(())
}
