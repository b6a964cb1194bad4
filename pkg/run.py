#!/usr/bin/env python3
"""
Simple startup script for the Gyrokinematics web API
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

if __name__ == "__main__":
    import uvicorn
    from src.config import configure_logging
    from src.webapp import app

    configure_logging(verbose=True)
    print("🌀 Starting Gyrokinematics web API...")
    print("🌐 Server: http://localhost:8000")
    print("📐 Endpoints: /api/add /api/gyrate /api/orbit /api/sign-check /api/audit")
    print()

    uvicorn.run(
        app,
        host="0.0.0.0",
        port=8000,
        log_level="info"
    )
