fixture file: turtlebot_teleop/src/turtlebot_joy.cpp
