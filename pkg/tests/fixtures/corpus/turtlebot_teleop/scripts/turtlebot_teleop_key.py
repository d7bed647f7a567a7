fixture file: turtlebot_teleop/scripts/turtlebot_teleop_key.py
